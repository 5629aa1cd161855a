//! Stability: whether every pair `{(x, 0), (x, 1)}` is a block of the
//! automorphism group of the double half-cover, and what it implies for the
//! fibre stabilisers of the quotients.

use zdigraph::autsearch::automorphism_group;
use zdigraph::constructions::{
    cdhc, complete_digraph, directed_cycle, theta_cycle, z_quotient, ZLayout,
};
use zdigraph::tfaut::is_stable;
use zdigraph::transitivity::fiber_stabilizer_triviality;

fn main() -> zdigraph::Result<()> {
    for d in 2..=6 {
        let kd = complete_digraph(d)?;
        let group = automorphism_group(&cdhc(&kd).graph, Default::default())?;
        let side: Vec<usize> = (0..d).collect();
        println!(
            "K_{d}: stable {}, stabiliser of one side has order {}",
            is_stable(&kd)?,
            group.pointwise_stabilizer_order(&side)?
        );
    }
    for n in 3..=5 {
        println!("Theta_{n}: stable {}", is_stable(&theta_cycle(n)?)?);
        println!("C_{n}: stable {}", is_stable(&directed_cycle(n)?)?);
    }

    for (name, delta, q) in [
        ("K_3", complete_digraph(3)?, 4),
        ("Theta_3", theta_cycle(3)?, 6),
    ] {
        let zq = z_quotient(&delta, 2, q)?;
        let group = automorphism_group(zq.graph(), Default::default())?;
        println!(
            "Z({name}, 2) / <s^{q}>: level-0 fibre stabiliser trivial: {}",
            fiber_stabilizer_triviality(zq.leveled(), &group, 0)?
        );
    }
    Ok(())
}
