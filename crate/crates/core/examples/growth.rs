//! Ball sizes around a vertex of the infinite level-coordinate digraph over
//! the two-way infinite theta cycle, with a fitted growth degree.
//!
//!     cargo run --release --example growth -- [k] [n_max]

use zdigraph::transitivity::growth_ball;

fn main() -> zdigraph::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().ok());
    let k = args.next().flatten().unwrap_or(2);
    let n_max = args.next().flatten().unwrap_or(24);
    let g = growth_ball(k, n_max)?;
    print!("{}", g.to_csv());
    match g.degree_estimate {
        Some(d) => eprintln!("degree estimate {d:.3} (expected {})", k + 1),
        None => eprintln!("too few values for a degree estimate"),
    }
    Ok(())
}
