// Proper double representations, cancellation, and the subtraction step.

use sidon_matroid::sidon::{
    find_proper_double_representations, reduce_to_proper, subtraction_algorithm,
};
use sidon_matroid::{AmbientGroup, DoubleRepresentation, GroundSet, Limits};

fn main() -> sidon_matroid::Result<()> {
    let z = AmbientGroup::Integers;
    let e = |v: &[i64]| v.iter().map(|&x| z.element(x)).collect::<Vec<_>>();

    let d = DoubleRepresentation::new(z, e(&[1, 4, 6, 9]), e(&[2, 4, 5, 9]))?;
    println!("{d} reduces to {}", reduce_to_proper(&d, z)?);

    let x = GroundSet::integers([1, 2, 3, 4])?;
    for d in find_proper_double_representations(&x, 3, &Limits::DEFAULT)?
        .iter()
        .take(5)
    {
        println!("{x}: {d} (length {})", d.length());
    }

    let five = z.element(5);
    let d1 = DoubleRepresentation::new(z, e(&[5, 1]), e(&[2, 4]))?.tracking(five);
    let d2 = DoubleRepresentation::new(z, e(&[5, 5]), e(&[3, 7]))?.tracking(five);
    let d3 = subtraction_algorithm(&d1, &d2, five, z)?;
    println!(
        "{d2} minus {d1} gives {d3}, 5 appears {} times",
        d3.external_multiplicity()
    );
    Ok(())
}
