// Drive the command-line interface in-process.

use sidon_matroid::cli;

fn main() -> Result<(), String> {
    let commands: [(&[&str], i32); 4] = [
        (&["sidon", "check", "--set", "1,2,3,4", "--h", "2"], 1),
        (&["sidon", "classify", "--set", "1,2,3", "--h", "3"], 0),
        (
            &[
                "sidon", "matroid", "--set", "1,2,3", "--h", "2", "profile", "--format", "json",
            ],
            0,
        ),
        (
            &["sidon", "verify", "--gen", "powers:g=3,count=5", "--h", "2"],
            0,
        ),
    ];
    for (args, expected) in commands {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(args.iter().copied(), &mut out, &mut err);
        println!(
            "$ {}\n{}{}exit {code}\n",
            args.join(" "),
            String::from_utf8_lossy(&out),
            String::from_utf8_lossy(&err)
        );
        if code != expected {
            return Err(format!("`{}` exited with {code}", args.join(" ")));
        }
    }
    Ok(())
}
