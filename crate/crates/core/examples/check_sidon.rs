// Test B_h membership and print the witness when a set fails.

use sidon_matroid::combinat::{h_fold_sumset, representation_function};
use sidon_matroid::{is_bh, AmbientGroup, GroundSet, Limits};

fn main() -> sidon_matroid::Result<()> {
    let limits = Limits::DEFAULT;
    let candidates = [
        vec![1, 2, 5, 7],
        vec![1, 2, 3, 4],
        vec![1, 14, 19, 20, 25, 38],
        vec![1, 3, 9, 27],
    ];
    for values in candidates {
        let a = GroundSet::integers(values)?;
        for h in [2, 3] {
            match is_bh(&a, h, &limits)?.witness() {
                None => println!(
                    "{a} is a B_{h} set, |{h}A| = {}",
                    h_fold_sumset(&a, h)?.len()
                ),
                Some(w) => println!("{a} is not B_{h}: {}", w.representation()),
            }
        }
    }

    let z13 = AmbientGroup::cyclic(13)?;
    let a = GroundSet::new(z13, [0, 1, 3, 9])?;
    println!("{a} in Z/13: B_2 = {}", is_bh(&a, 2, &limits)?.is_member());
    let many = GroundSet::integers([1, 14, 19, 20, 25, 38])?;
    println!(
        "39 has {} representations as a sum of two",
        representation_function(&many, 2, AmbientGroup::Integers.element(39))?
    );
    Ok(())
}
