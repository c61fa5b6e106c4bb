//! Subgyrogroups of prime index: the three equivalent multiple conditions,
//! coset ladders `{ia ⊕ H}`, the smallest-prime precondition and the
//! gyration-invariance criteria for normality.

use crate::error::{GyroError, Result};
use crate::normality::is_normal;
use crate::substructure::{left_coset, left_cosets, CosetFamily, SubSet};
use crate::table::{Elem, GyroTable};

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Least prime factor; `None` for `n < 2`.
pub fn least_prime_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    Some(
        (2..)
            .take_while(|d| d * d <= n)
            .find(|d| n.is_multiple_of(*d))
            .unwrap_or(n),
    )
}

/// Cosets and the index, which must be prime.
fn prime_index(g: &GyroTable, h: &SubSet) -> Result<(CosetFamily, u64)> {
    let fam = left_cosets(g, h)?;
    let p = fam.len() as u64;
    if !is_prime(p) {
        return Err(GyroError::Precondition(format!("index {p} is not prime")));
    }
    Ok((fam, p))
}

fn outside<'a>(g: &'a GyroTable, h: &'a SubSet) -> impl Iterator<Item = Elem> + 'a {
    g.elements().filter(move |&a| !h.contains(a))
}

/// `pa ∈ H` for every `a ∉ H`, where `p = [G : H]`.
pub fn check_condition_p(g: &GyroTable, h: &SubSet) -> Result<bool> {
    let (_, p) = prime_index(g, h)?;
    Ok(outside(g, h).all(|a| h.contains(g.int_multiple(p as i64, a))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionN {
    pub holds: bool,
    /// For each `a ∉ H`, the least admissible `n`, if any.
    pub witnesses: Vec<(Elem, Option<u64>)>,
}

/// For every `a ∉ H` some `n ∈ [1, |G|]` with no prime divisor below `p`
/// has `na ∈ H`. The window suffices because `|G|a = 0`.
pub fn check_condition_n(g: &GyroTable, h: &SubSet) -> Result<ConditionN> {
    let (_, p) = prime_index(g, h)?;
    let order = g.order() as u64;
    let admissible = |n: u64| least_prime_factor(n).is_none_or(|q| q >= p);
    let witnesses: Vec<(Elem, Option<u64>)> = outside(g, h)
        .map(|a| {
            let n = (1..=order).find(|&n| admissible(n) && h.contains(g.int_multiple(n as i64, a)));
            (a, n)
        })
        .collect();
    Ok(ConditionN {
        holds: witnesses.iter().all(|(_, n)| n.is_some()),
        witnesses,
    })
}

/// `a, 2a, …, (p-1)a ∉ H` for every `a ∉ H`.
pub fn check_condition_multiples(g: &GyroTable, h: &SubSet) -> Result<bool> {
    let (_, p) = prime_index(g, h)?;
    Ok(outside(g, h).all(|a| (1..p).all(|k| !h.contains(g.int_multiple(k as i64, a)))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub index: u64,
    pub condition_p: bool,
    pub condition_n: bool,
    pub condition_multiples: bool,
}

impl EquivalenceReport {
    pub fn agree(&self) -> bool {
        self.condition_p == self.condition_n && self.condition_n == self.condition_multiples
    }
}

/// Evaluate all three conditions. They are equivalent at prime index, so
/// disagreement is reported as [`GyroError::Inconsistent`] ("theorem
/// violation").
pub fn equivalence_report(g: &GyroTable, h: &SubSet) -> Result<EquivalenceReport> {
    let (_, p) = prime_index(g, h)?;
    let report = EquivalenceReport {
        index: p,
        condition_p: check_condition_p(g, h)?,
        condition_n: check_condition_n(g, h)?.holds,
        condition_multiples: check_condition_multiples(g, h)?,
    };
    if !report.agree() {
        return Err(GyroError::Inconsistent(format!(
            "THEOREM-VIOLATION prime-index conditions disagree for {:?}: {report:?}",
            h.members()
        )));
    }
    Ok(report)
}

/// `G/H = {0 ⊕ H, a ⊕ H, …, (p-1)a ⊕ H}` for `a ∉ H`, checked to be
/// pairwise distinct and to cover `G`. Returned in representative order.
pub fn coset_ladder(g: &GyroTable, h: &SubSet, a: Elem) -> Result<CosetFamily> {
    let (fam, p) = prime_index(g, h)?;
    if a >= g.order() || h.contains(a) {
        return Err(GyroError::Precondition(format!("{a} is not outside H")));
    }
    if !check_condition_multiples(g, h)? {
        return Err(GyroError::Precondition(
            "H satisfies none of the prime-index conditions".into(),
        ));
    }
    let mut rungs: Vec<Vec<Elem>> = (0..p)
        .map(|i| left_coset(g, g.int_multiple(i as i64, a), h))
        .collect();
    rungs.sort();
    rungs.dedup();
    if rungs.len() as u64 != p {
        return Err(GyroError::Inconsistent(
            "ladder cosets are not distinct".into(),
        ));
    }
    if rungs != fam.cosets {
        return Err(GyroError::Inconsistent("ladder does not cover G/H".into()));
    }
    Ok(fam)
}

/// Whether `[G : H]` is the least prime dividing `|G|`. When it is,
/// condition (2) is asserted.
pub fn smallest_prime_precondition(g: &GyroTable, h: &SubSet) -> Result<bool> {
    let (_, p) = prime_index(g, h)?;
    let smallest = least_prime_factor(g.order() as u64) == Some(p);
    if smallest && !check_condition_n(g, h)?.holds {
        return Err(GyroError::Inconsistent(
            "smallest-prime index without condition (2)".into(),
        ));
    }
    Ok(smallest)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GyrationCriterion {
    pub holds: bool,
    /// Least admissible `y`.
    pub witness: Option<Elem>,
    /// Every `y ∉ H` satisfying the invariance condition.
    pub admissible: Vec<Elem>,
}

/// Decide normality for `[G : H]` equal to the least prime `p` dividing
/// `|G|`: look for `y ∉ H` with `gyr[a,b](iy ⊕ H) ⊆ iy ⊕ H` for all `a, b`
/// and `0 ≤ i < p`. The answer is cross-checked against [`is_normal`].
pub fn normality_by_gyration_invariance(g: &GyroTable, h: &SubSet) -> Result<GyrationCriterion> {
    let (_, p) = prime_index(g, h)?;
    if least_prime_factor(g.order() as u64) != Some(p) {
        return Err(GyroError::Precondition(format!(
            "index {p} is not the least prime dividing {}",
            g.order()
        )));
    }
    let invariant = |coset: &[Elem]| {
        let mut mask = vec![false; g.order()];
        coset.iter().for_each(|&x| mask[x] = true);
        g.elements().all(|a| {
            g.elements()
                .all(|b| coset.iter().all(|&x| mask[g.gyr_apply(a, b, x)]))
        })
    };
    let admissible: Vec<Elem> = outside(g, h)
        .filter(|&y| (0..p).all(|i| invariant(&left_coset(g, g.int_multiple(i as i64, y), h))))
        .collect();
    let holds = !admissible.is_empty();
    if holds != is_normal(g, h)? {
        return Err(GyroError::Inconsistent(format!(
            "gyration-invariance criterion ({holds}) disagrees with normality for {:?}",
            h.members()
        )));
    }
    Ok(GyrationCriterion {
        holds,
        witness: admissible.first().copied(),
        admissible,
    })
}

/// For `[G : H] = 2`: whether `gyr[a,b](H) ⊆ H` for all `a, b`. When it
/// holds, normality of `H` is asserted.
pub fn index_two_normality(g: &GyroTable, h: &SubSet) -> Result<bool> {
    let fam = left_cosets(g, h)?;
    if fam.len() != 2 {
        return Err(GyroError::Precondition(format!(
            "index is {}, not 2",
            fam.len()
        )));
    }
    let mask = h.mask();
    let hypothesis = g.elements().all(|a| {
        g.elements()
            .all(|b| h.members().iter().all(|&x| mask[g.gyr_apply(a, b, x)]))
    });
    if hypothesis && !is_normal(g, h)? {
        return Err(GyroError::Inconsistent(format!(
            "gyr-invariant index-2 subgyrogroup {:?} is not normal",
            h.members()
        )));
    }
    Ok(hypothesis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::{cyclic, symmetric3};

    fn set(g: &GyroTable, xs: &[Elem]) -> SubSet {
        SubSet::new(g.order(), xs.iter().copied()).unwrap()
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(least_prime_factor(1), None);
        assert_eq!(least_prime_factor(6), Some(2));
        assert_eq!(least_prime_factor(49), Some(7));
    }

    #[test]
    fn z6_conditions() {
        let z6 = cyclic(6);
        for h in [set(&z6, &[0, 3]), set(&z6, &[0, 2, 4])] {
            let rep = equivalence_report(&z6, &h).unwrap();
            assert!(rep.condition_p && rep.condition_n && rep.condition_multiples);
        }
        let cn = check_condition_n(&z6, &set(&z6, &[0, 3])).unwrap();
        assert!(cn.witnesses.contains(&(1, Some(3))));
        assert!(cn.witnesses.iter().all(|(_, n)| *n == Some(3)));
    }

    #[test]
    fn z6_ladders() {
        let z6 = cyclic(6);
        let fam = coset_ladder(&z6, &set(&z6, &[0, 3]), 1).unwrap();
        assert_eq!(fam.cosets, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(
            coset_ladder(&z6, &set(&z6, &[0, 2, 4]), 1).unwrap().len(),
            2
        );
        assert!(coset_ladder(&z6, &set(&z6, &[0, 3]), 3).is_err());
    }

    #[test]
    fn smallest_prime() {
        let z6 = cyclic(6);
        assert!(smallest_prime_precondition(&z6, &set(&z6, &[0, 2, 4])).unwrap());
        assert!(!smallest_prime_precondition(&z6, &set(&z6, &[0, 3])).unwrap());
    }

    #[test]
    fn gyration_criterion() {
        let z6 = cyclic(6);
        let c = normality_by_gyration_invariance(&z6, &set(&z6, &[0, 2, 4])).unwrap();
        assert!(c.holds);
        assert_eq!(c.witness, Some(1));
        assert!(normality_by_gyration_invariance(&z6, &set(&z6, &[0, 3])).is_err());

        let s3 = symmetric3();
        let c = normality_by_gyration_invariance(&s3, &set(&s3, &[0, 3, 4])).unwrap();
        assert!(c.holds);
    }

    #[test]
    fn index_two() {
        let s3 = symmetric3();
        assert!(index_two_normality(&s3, &set(&s3, &[0, 3, 4])).unwrap());
        let z6 = cyclic(6);
        assert!(index_two_normality(&z6, &set(&z6, &[0, 2, 4])).unwrap());
        assert!(index_two_normality(&z6, &set(&z6, &[0, 3])).is_err());
    }

    #[test]
    fn non_prime_index_rejected() {
        let z4 = cyclic(4);
        assert!(check_condition_p(&z4, &SubSet::zero(&z4)).is_err());
    }
}
