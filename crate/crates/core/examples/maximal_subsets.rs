// Enumerate maximal B_h subsets and show that their sizes can differ.

use sidon_matroid::oracle::{brute_exchange_violation, brute_maximal_independents};
use sidon_matroid::{GroundSet, Limits};

fn main() -> sidon_matroid::Result<()> {
    let limits = Limits::DEFAULT;
    let x = GroundSet::interval(7);
    let maximal = brute_maximal_independents(&x, 2, &limits)?;
    println!("{} maximal Sidon subsets of {x}", maximal.len());
    for size in [4, 3] {
        let group: Vec<String> = maximal
            .iter()
            .filter(|s| s.len() == size)
            .map(|s| GroundSet::from_elements(x.group(), s.clone()).map(|g| g.to_string()))
            .collect::<Result<_, _>>()?;
        println!("size {size}: {} sets, e.g. {}", group.len(), group[0]);
    }
    if let Some((a, b)) = brute_exchange_violation(&x, 2, &limits)? {
        println!(
            "exchange fails: |A| = {} < |B| = {} with no element of B \\ A extending A",
            a.len(),
            b.len()
        );
        println!("A = {a:?}, B = {b:?}");
    }
    Ok(())
}
