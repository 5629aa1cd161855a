//! Permutation group arithmetic: orders by Schreier-Sims, membership,
//! orbits of tuples and minimal blocks.

use zdigraph::perm::{PermGroup, Permutation};

fn main() -> zdigraph::Result<()> {
    let cycle = Permutation::from_cycles(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]])?;
    let flip = Permutation::new((0..8).map(|x| (8 - x) % 8).collect())?;
    let d8 = PermGroup::new(8, vec![cycle.clone(), flip])?;
    println!("dihedral group of the octagon: order {}", d8.order());
    println!(
        "stabiliser of 0 has order {}",
        d8.pointwise_stabilizer_order(&[0])?
    );
    println!(
        "orbit of the pair (0, 1): {} pairs",
        d8.orbit_of_tuple(&[0, 1])?.len()
    );
    for seed in [[0, 4], [0, 2], [0, 1]] {
        let blocks = d8.minimal_block(&seed)?;
        println!(
            "minimal block containing {seed:?}: {:?}",
            blocks.block_of(0).unwrap()
        );
    }

    let transposition = Permutation::from_cycles(8, &[&[0, 1]])?;
    println!("(0 1) in the group: {}", d8.is_member(&transposition)?);
    let s8 = PermGroup::new(8, vec![cycle, transposition])?;
    println!("with (0 1) added: order {}", s8.order());
    println!("{}", serde_json::to_string(&s8.to_json())?);
    Ok(())
}
