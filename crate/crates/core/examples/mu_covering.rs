// Decide which partitions mu of |X| admit a covering by B_h sets of sizes mu_1, mu_2, ...

use sidon_matroid::matroid::MuCovering;
use sidon_matroid::{GroundSet, PartitionMu, SidonMatroid};

fn main() -> sidon_matroid::Result<()> {
    let x = GroundSet::integers([1, 2, 3, 10, 31])?;
    let m = SidonMatroid::new(x.clone(), 2, true)?;
    println!("X = {x}, rank profile {:?}", m.rank_profile()?.ranks());
    for mu in PartitionMu::all(x.len()) {
        match m.construct_mu_covering(&mu)? {
            MuCovering::Covering(parts) => println!("mu = {mu}: {parts:?}"),
            MuCovering::Infeasible(why) => println!("mu = {mu}: none, {why}"),
        }
    }
    Ok(())
}
