//! The tuple reversal that carries the coordinate-rule digraph onto the
//! shift-register digraph on the same vertex set.

use zdigraph::constructions::{
    complete_digraph, shift_register_quotient, theta_cycle, theta_isomorphism, z_quotient, ZLayout,
};
use zdigraph::digraph::Digraph;

fn check(name: &str, delta: &Digraph, k: usize, q: usize) -> zdigraph::Result<()> {
    let zq = z_quotient(delta, k, q)?;
    let theta = theta_isomorphism(&zq);
    let register = shift_register_quotient(delta, k, q)?;
    let mut mapped: Vec<_> = zq
        .graph()
        .arcs()
        .map(|(u, v)| (theta.image(u), theta.image(v)))
        .collect();
    mapped.sort_unstable();
    let same = mapped == register.graph().arcs().collect::<Vec<_>>();
    let involution = theta.compose(&theta)?.is_identity();
    println!("{name:<10} k = {k} q = {q:<3} involution: {involution:<5}  arc sets agree: {same}");

    let codec = zq.codec();
    let v = codec.encode(
        1,
        &(0..k).map(|j| j % delta.vertex_count()).collect::<Vec<_>>(),
    );
    println!(
        "           {:?} -> {:?}",
        codec.decode(v),
        codec.decode(theta.image(v))
    );
    Ok(())
}

fn main() -> zdigraph::Result<()> {
    check("Theta_3", &theta_cycle(3)?, 2, 6)?;
    check("Theta_4", &theta_cycle(4)?, 3, 6)?;
    check("K_3", &complete_digraph(3)?, 3, 3)?;
    Ok(())
}
