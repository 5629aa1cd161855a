//! Automorphisms built from the base digraph: the shift `s`, coordinate maps
//! `[g]_j`, psi-twisted maps `[g]_{j,psi}`, and family maps on windows.

use std::collections::BTreeMap;

use zdigraph::constructions::{
    coordinate_automorphism, family_automorphism, psi_coordinate_automorphism, shift_automorphism,
    theta_cycle, z_quotient, z_window, ZLayout,
};
use zdigraph::perm::{PermGroup, Permutation};
use zdigraph::tfaut::dihedral_theta_group;
use zdigraph::Error;

fn main() -> zdigraph::Result<()> {
    let delta = theta_cycle(3)?;
    let zq = z_quotient(&delta, 2, 6)?;
    let h = dihedral_theta_group(3)?;
    let s = shift_automorphism(&zq)?;
    println!("shift has order {}", s.order());

    let a = Permutation::new(vec![1, 2, 0])?;
    let a0 = coordinate_automorphism(&zq, &a, 0)?;
    let conj = s.inverse().compose(&a0)?.compose(&s)?;
    println!(
        "s^-1 [a]_0 s == [a]_1: {}",
        conj == coordinate_automorphism(&zq, &a, 1)?
    );

    let mut gens = vec![s.clone()];
    for g in 0..h.len() {
        for j in 0..2 {
            gens.push(psi_coordinate_automorphism(&zq, &h, g, j)?);
        }
    }
    let lifted = PermGroup::new(zq.graph().vertex_count(), gens)?;
    println!(
        "group generated by s and the twisted lifts has order {}",
        lifted.order()
    );

    let b = h.index_of(&Permutation::new(vec![0, 2, 1])?).unwrap();
    match psi_coordinate_automorphism(&z_quotient(&delta, 2, 4)?, &h, b, 0) {
        Err(e @ Error::IllDefinedLift { .. }) => println!("on the quotient by s^4: {e}"),
        other => println!("unexpected: {other:?}"),
    }

    let zw = z_window(&delta, 2, -2, 3)?;
    let family: BTreeMap<i64, Permutation> = (-2..=2)
        .map(|t| (t, h.element(h.psi_power(b, t)).clone()))
        .collect();
    let f = family_automorphism(&zw, &family, 0)?;
    println!(
        "family map on levels -2..=3 preserves arcs: {}",
        zw.graph().is_automorphism(&f)
    );
    Ok(())
}
