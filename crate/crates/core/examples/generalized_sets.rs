// Generalized B_{h,k} membership: largest k, witnesses, the collapse for k >= h/2.

use sidon_matroid::sidon::classify_max_k;
use sidon_matroid::{is_bhk, GroundSet, Limits};

fn main() -> sidon_matroid::Result<()> {
    let limits = Limits::DEFAULT;
    let a = GroundSet::integers([1, 2, 3])?;
    for h in 2..=5 {
        let k = classify_max_k(&a, h, &limits)?;
        println!("{a}: largest k with B_{{{h},k}} is {k}");
        if k < h {
            let m = is_bhk(&a, h, k + 1, &limits)?;
            println!(
                "  not B_{{{h},{}}}: {}",
                k + 1,
                m.witness().expect("not a member")
            );
        }
    }

    // For k >= h/2, B_{h,k} is the same as B_h.
    let b = GroundSet::integers([0, 1, 4, 6, 13])?;
    for h in 2..=4 {
        let row: Vec<String> = (1..=h)
            .map(|k| {
                format!(
                    "k={k}:{}",
                    is_bhk(&b, h, k, &limits)
                        .map(|m| m.is_member())
                        .unwrap_or(false)
                )
            })
            .collect();
        println!("{b}, h = {h}: {}", row.join(" "));
    }
    Ok(())
}
