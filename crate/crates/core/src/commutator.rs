//! Commutators `[a,b] = ⊖(a⊕b) ⊕ gyr[a,b](b⊕a)`, the commutator
//! subgyrogroup `G′`, its normal closure and the universal property.

use crate::caps::Caps;
use crate::error::{GyroError, Result};
use crate::normality::{is_normal, kernel, normal_closure, try_quotient, Hom};
use crate::substructure::{generate, SubSet};
use crate::table::{Elem, GyroTable};

pub fn commutator(g: &GyroTable, a: Elem, b: Elem) -> Elem {
    let ab = g.add(a, b);
    g.add(g.neg(ab), g.gyr_apply(a, b, g.add(b, a)))
}

/// All commutators `[a,b]`, ascending and deduplicated.
pub fn commutators(g: &GyroTable) -> Vec<Elem> {
    let mut seen = vec![false; g.order()];
    for a in g.elements() {
        for b in g.elements() {
            seen[commutator(g, a, b)] = true;
        }
    }
    (0..g.order()).filter(|&x| seen[x]).collect()
}

/// `G′`, the subgyrogroup generated by all commutators.
pub fn commutator_subgyrogroup(g: &GyroTable) -> SubSet {
    generate(g, &commutators(g)).expect("commutators are in range")
}

/// `NC(G′)`.
pub fn nc_commutator(g: &GyroTable, caps: &Caps) -> Result<SubSet> {
    let derived = commutator_subgyrogroup(g);
    normal_closure(g, derived.members(), caps)
}

/// Build the factorization `Φ : G/NC(G′) → A` of `φ : G → A` with
/// `Φ ∘ Π = φ`.
///
/// Requires `A` gyrocommutative. Checks `NC(G′) ⊆ ker φ`, that `Φ` is a
/// well-defined homomorphism, and that it is unique: for every coset
/// exactly one value of `A` is compatible with `Φ ∘ Π = φ`.
pub fn check_universal_property(
    g: &GyroTable,
    phi: &Hom,
    a: &GyroTable,
    caps: &Caps,
) -> Result<Hom> {
    if !a.is_gyrocommutative() {
        return Err(GyroError::NotGyrocommutative);
    }
    // Re-verify φ against the tables it is used with.
    let phi = Hom::new(phi.values().to_vec(), g, a)?;
    let nc = nc_commutator(g, caps)?;
    if !nc.is_subset_of(&kernel(&phi)) {
        return Err(GyroError::Inconsistent(format!(
            "NC(G') = {:?} is not inside ker φ",
            nc.members()
        )));
    }
    let q = try_quotient(g, &nc)?;
    let mut factored = Vec::with_capacity(q.cosets.len());
    for coset in &q.cosets.cosets {
        let admissible: Vec<Elem> = a
            .elements()
            .filter(|&v| coset.iter().all(|&x| phi.apply(x) == v))
            .collect();
        if admissible.len() != 1 {
            return Err(GyroError::Inconsistent(format!(
                "coset {coset:?} admits {} values for Φ",
                admissible.len()
            )));
        }
        factored.push(admissible[0]);
    }
    let big_phi = Hom::new(factored, &q.table, a)?;
    for x in g.elements() {
        if big_phi.apply(q.projection.apply(x)) != phi.apply(x) {
            return Err(GyroError::Inconsistent("Φ ∘ Π differs from φ".into()));
        }
    }
    Ok(big_phi)
}

/// Outcome of probing whether `G′` is normal in one gyrogroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedNormality {
    pub derived: SubSet,
    pub normal: bool,
}

/// Whether `G′` is normal in `g`. Normality of `G′` is not known in general,
/// so this is reported per instance.
pub fn derived_normality(g: &GyroTable) -> Result<DerivedNormality> {
    let derived = commutator_subgyrogroup(g);
    let normal = is_normal(g, &derived)?;
    Ok(DerivedNormality { derived, normal })
}
