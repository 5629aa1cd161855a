//! Automorphism groups of small digraphs by partition refinement, with
//! vertex colours and a node budget.

use zdigraph::autsearch::{
    automorphism_generators, automorphism_group, ColoredDigraph, SearchOptions,
};
use zdigraph::constructions::{cdhc, complete_digraph, theta_cycle, undirected};
use zdigraph::Error;

fn main() -> zdigraph::Result<()> {
    let petersen = undirected(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )?;
    let group = automorphism_group(&petersen, SearchOptions::default())?;
    println!(
        "Petersen graph: |Aut| = {} from {} generators",
        group.order(),
        group.generators().len()
    );

    let cover = cdhc(&theta_cycle(4)?);
    let plain = automorphism_group(&cover.graph, SearchOptions::default())?;
    let sided = automorphism_generators(
        &ColoredDigraph::new(cover.graph.clone(), cover.sides())?,
        SearchOptions::default(),
    )?;
    println!(
        "double half-cover of Theta_4: |Aut| = {}, side-preserving {}",
        plain.order(),
        sided.order()
    );

    let k7 = complete_digraph(7)?;
    match automorphism_group(&k7, SearchOptions { node_budget: 5 }) {
        Err(e @ Error::BudgetExceeded { .. }) => println!("K_7 with a tiny budget: {e}"),
        other => println!("K_7: {:?}", other.map(|g| g.order())),
    }
    Ok(())
}
