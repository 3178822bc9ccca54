// Rank of unions of copies of the matroid, the rank profile and the covering number.

use sidon_matroid::matroid::disjointify;
use sidon_matroid::{GroundSet, SidonMatroid};

fn main() -> sidon_matroid::Result<()> {
    let x = GroundSet::integers([1, 2, 3, 10, 31, 94, 283, 850])?;
    let m = SidonMatroid::new(x.clone(), 2, true)?;
    let profile = m.rank_profile()?;
    println!("X = {x}");
    println!(
        "rank profile {:?}, covering number {}",
        profile.ranks(),
        profile.covering_number()
    );
    for k in 1..=profile.covering_number() {
        let parts = disjointify(&m.union_partition(None, k)?);
        println!("k = {k}: rank {} via {parts:?}", m.union_rank(k)?);
    }
    for k in 1..=profile.covering_number() {
        println!(
            "largest subset covered by {k} Sidon sets: {}",
            m.max_set_with_covering_number(k)?
        );
    }
    Ok(())
}
