//! Direct fibre products: a finite window of the Diestel-Leader digraph as
//! the product of two trees, and automorphisms induced from pairs of equal
//! translation magnitude.

use zdigraph::constructions::{
    complete_digraph, diestel_leader_window, fibre_product, shift_automorphism, theta_cycle,
    translation_magnitude, z_quotient, ZLayout,
};

fn main() -> zdigraph::Result<()> {
    let dl = diestel_leader_window(2, 3, 3)?;
    let sizes: Vec<usize> = (0..=3).map(|l| dl.graph.fiber(l).len()).collect();
    println!(
        "DL(2, 3) window: fibre sizes {sizes:?}, {} arcs",
        dl.graph.graph().arc_count()
    );

    let a = z_quotient(&theta_cycle(3)?, 2, 6)?;
    let b = z_quotient(&complete_digraph(3)?, 1, 6)?;
    let fp = fibre_product(a.leveled(), b.leveled())?;
    println!(
        "product of two quotients: {} vertices, {} arcs",
        fp.graph.graph().vertex_count(),
        fp.graph.graph().arc_count()
    );
    let (sa, sb) = (shift_automorphism(&a)?, shift_automorphism(&b)?);
    for power in [1, 2, 5] {
        let (ga, gb) = (sa.pow(power), sb.pow(power));
        let induced = fp.induced(&ga, &gb)?;
        println!(
            "magnitudes {:?}/{:?}: induced map is an automorphism: {}",
            translation_magnitude(&ga, a.leveled()),
            translation_magnitude(&gb, b.leveled()),
            fp.graph.graph().is_automorphism(&induced)
        );
    }
    if let Err(e) = fp.induced(&sa, &sb.pow(2)) {
        println!("magnitudes 1/2: {e}");
    }
    Ok(())
}
