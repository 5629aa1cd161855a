//! Builds a cyclic quotient of the level-coordinate digraph and prints its
//! shape, a few decoded vertices and the start of its DOT rendering.
//!
//!     cargo run --example build_quotient -- [n] [k] [q]

use zdigraph::constructions::{theta_cycle, z_quotient, ZLayout};

fn arg(i: usize, default: usize) -> usize {
    std::env::args()
        .nth(i)
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn main() -> zdigraph::Result<()> {
    let (n, k, q) = (arg(1, 3), arg(2, 2), arg(3, 6));
    let zq = z_quotient(&theta_cycle(n)?, k, q)?;
    let g = zq.graph();
    println!(
        "Z(Theta_{n}, {k}) / <s^{q}>: {} vertices, {} arcs",
        g.vertex_count(),
        g.arc_count()
    );
    println!(
        "fibre sizes: {:?}",
        (0..q as i64)
            .map(|l| zq.leveled().fiber(l).len())
            .collect::<Vec<_>>()
    );

    let codec = zq.codec();
    let origin = codec.encode(0, &vec![0; k]);
    println!("out-neighbours of (0; 0..0):");
    for &w in g.out_neighbors(origin) {
        let (level, coords) = codec.decode(w);
        println!("  ({level}; {coords:?})");
    }

    let labels: Vec<String> = codec.labels().iter().map(|l| format!("{l:?}")).collect();
    let dot = g.to_dot(Some(&labels), false);
    for line in dot.lines().take(8) {
        println!("{line}");
    }
    println!("  ...");
    Ok(())
}
