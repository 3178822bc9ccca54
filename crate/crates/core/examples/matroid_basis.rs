// Independence, greedy bases, rank, and the exchange set of the B_h matroid.

use sidon_matroid::{GroundSet, SidonMatroid};

fn main() -> sidon_matroid::Result<()> {
    let x = GroundSet::integers([1, 14, 19, 20, 25, 38])?;
    let m = SidonMatroid::new(x.clone(), 2, true)?;
    let basis = m.find_basis(None)?;
    println!("X = {x}, basis {basis:?}, rank {}", m.rank(x.elements())?);

    let outside = x
        .elements()
        .iter()
        .copied()
        .find(|e| !basis.contains(e))
        .expect("X is dependent");
    let d = m.unique_proper_representation(&basis, outside)?;
    println!("adding {outside}: {d}");
    for s in m.exchange_set(&basis, outside)? {
        let mut swapped: Vec<_> = basis.iter().copied().filter(|&e| e != s).collect();
        swapped.push(outside);
        println!(
            "  swap out {s}: independent = {}",
            m.is_independent(&swapped)?
        );
    }

    match SidonMatroid::new(GroundSet::interval(7), 2, true) {
        Ok(_) => println!("{{1..7}} accepted"),
        Err(e) => println!("{{1..7}} rejected: {e}"),
    }
    Ok(())
}
