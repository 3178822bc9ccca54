// Grow a B_{h,k} set that is not B_{h,k+1} by adding elements beyond h * max.

use sidon_matroid::generate::extension_tower;
use sidon_matroid::sidon::{classify_max_k, extend_bhk};
use sidon_matroid::{AmbientGroup, GroundSet, Limits};

fn main() -> sidon_matroid::Result<()> {
    let limits = Limits::DEFAULT;
    let start = GroundSet::integers([1, 2, 3])?;
    let next = extend_bhk(&start, 3, 1, AmbientGroup::Integers.element(10), &limits)?;
    println!("{start} + 10 = {next}");
    for a in extension_tower(&start, 3, 1, 6, &limits)? {
        println!(
            "{a}: largest k for h = 3 is {}",
            classify_max_k(&a, 3, &limits)?
        );
    }
    let too_small = extend_bhk(&start, 3, 1, AmbientGroup::Integers.element(9), &limits);
    println!(
        "b = 9: {}",
        too_small
            .map(|a| a.to_string())
            .unwrap_or_else(|e| e.to_string())
    );
    Ok(())
}
