//! Two-fold automorphisms of theta cycles: the group read off the double
//! half-cover, the dihedral pairs `(b a^i, b a^{i+1})`, and psi-stability.

use zdigraph::constructions::theta_cycle;
use zdigraph::tfaut::{
    dihedral_theta_group, is_psi_arc_transitive, is_psi_stable, tf_from_cdhc, tf_group, TfPair,
};

fn main() -> zdigraph::Result<()> {
    for n in 3..=6 {
        let theta = theta_cycle(n)?;
        let group = tf_group(&theta)?;
        let h = dihedral_theta_group(n)?;
        let all_members = (0..h.len()).all(|i| {
            let pair = TfPair {
                first: h.element(i).clone(),
                second: h.element(h.psi(i)).clone(),
            };
            group.is_member(&pair.to_cdhc_permutation()).unwrap()
        });
        println!(
            "Theta_{n}: |TF| = {}, dihedral pairs in TF: {all_members}, psi order {}, psi-stable {}, psi-arc-transitive {}",
            group.order(),
            h.psi_order(),
            is_psi_stable(&theta, &h)?,
            is_psi_arc_transitive(&theta, &h)?
        );
    }

    println!("generators for Theta_4:");
    for pair in tf_from_cdhc(&theta_cycle(4)?)? {
        println!("  ({}, {})", pair.first, pair.second);
        println!("  {}", serde_json::to_string(&pair)?);
    }
    Ok(())
}
