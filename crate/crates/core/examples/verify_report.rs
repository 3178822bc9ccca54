// Cross-check the fast algorithms against exhaustive search on one ground set.

use sidon_matroid::oracle::verify_paper;
use sidon_matroid::{GroundSet, Limits};

fn main() -> sidon_matroid::Result<()> {
    for values in [vec![1, 2, 3, 10, 31], vec![1, 2, 3, 4, 5, 6, 7]] {
        let x = GroundSet::integers(values)?;
        let report = verify_paper(&x, 2, &Limits::DEFAULT)?;
        println!("{report}");
        println!("all passed: {}\n", report.all_passed());
    }
    Ok(())
}
