//! Orbit counts on k-arcs for the three sharply k-arc-transitive families:
//! quotients over theta cycles, quotients over complete digraphs, and the
//! tuple digraphs C_r(v, m).

use zdigraph::constructions::{
    complete_digraph, praeger_tuple_graph, theta_cycle, z_quotient, ZLayout,
};
use zdigraph::digraph::Digraph;
use zdigraph::transitivity::transitivity_profile;

fn report(name: &str, g: &Digraph, k_max: usize) -> zdigraph::Result<()> {
    let p = transitivity_profile(g, k_max, Default::default())?;
    println!(
        "{name:<28} |V| = {:>4}  |Aut| = {:>6}  orbits on 0..{k_max}-arcs {:?}  sharp k = {:?}",
        p.vertex_count, p.group_order, p.orbit_counts, p.sharp_k
    );
    Ok(())
}

fn main() -> zdigraph::Result<()> {
    for (n, k, q) in [(3, 1, 3), (3, 2, 6), (4, 2, 8), (3, 3, 9)] {
        let zq = z_quotient(&theta_cycle(n)?, k, q)?;
        report(&format!("Z(Theta_{n}, {k}) / <s^{q}>"), zq.graph(), k + 1)?;
    }
    for (d, k, q) in [(2, 1, 3), (2, 2, 4), (3, 2, 4), (2, 3, 6)] {
        let zq = z_quotient(&complete_digraph(d + 1)?, k, q)?;
        report(&format!("Z(K_{}, {k}) / <s^{q}>", d + 1), zq.graph(), k + 1)?;
    }
    for (r, v, m) in [(3, 2, 1), (4, 2, 2), (5, 2, 2), (4, 3, 2)] {
        let g = praeger_tuple_graph(r, v, m)?;
        report(&format!("C_{r}({v}, {m})"), g.graph(), r - m + 1)?;
    }
    Ok(())
}
