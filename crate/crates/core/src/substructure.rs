//! Subgyrogroups: generation, predicates, left cosets, index and the lattice.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{GyroError, Result};
use crate::table::{Elem, GyroTable};

/// A subset of a gyrogroup's carrier, kept as a strictly ascending list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubSet {
    order: usize,
    members: Vec<Elem>,
}

impl SubSet {
    /// Sorts and deduplicates `elems`; fails if an element is out of range.
    pub fn new(order: usize, elems: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let members: BTreeSet<Elem> = elems.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&x| x >= order) {
            return Err(GyroError::OutOfRange { elem: bad, order });
        }
        Ok(SubSet {
            order,
            members: members.into_iter().collect(),
        })
    }

    pub(crate) fn from_sorted(order: usize, members: Vec<Elem>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SubSet { order, members }
    }

    pub fn whole(g: &GyroTable) -> Self {
        Self::from_sorted(g.order(), g.elements().collect())
    }

    pub fn zero(g: &GyroTable) -> Self {
        Self::from_sorted(g.order(), vec![0])
    }

    /// Order of the ambient gyrogroup.
    pub fn parent_order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &SubSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersect(&self, other: &SubSet) -> SubSet {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Self::from_sorted(self.order, members)
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.order];
        for &x in &self.members {
            m[x] = true;
        }
        m
    }
}

/// Left cosets `a ⊕ H` of a subgyrogroup that partition the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetFamily {
    pub subgroup: SubSet,
    /// Ascending member lists, ordered by representative.
    pub cosets: Vec<Vec<Elem>>,
    /// `coset_of[x]` is the index of the coset containing `x`.
    pub coset_of: Vec<usize>,
}

impl CosetFamily {
    /// Least element of each coset.
    pub fn representatives(&self) -> Vec<Elem> {
        self.cosets.iter().map(|c| c[0]).collect()
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

/// Smallest subgyrogroup containing `seed`: the closure of `seed ∪ {0}`
/// under `⊕` and `⊖`.
pub fn generate(g: &GyroTable, seed: &[Elem]) -> Result<SubSet> {
    let n = g.order();
    if let Some(&bad) = seed.iter().find(|&&x| x >= n) {
        return Err(GyroError::OutOfRange {
            elem: bad,
            order: n,
        });
    }
    let mut inside = vec![false; n];
    let mut members = vec![0];
    inside[0] = true;
    for &a in seed {
        if !std::mem::replace(&mut inside[a], true) {
            members.push(a);
        }
    }
    // Each new element is combined with every earlier one on both sides.
    let mut i = 0;
    while i < members.len() {
        let a = members[i];
        let na = g.neg(a);
        if !std::mem::replace(&mut inside[na], true) {
            members.push(na);
        }
        for j in 0..=i {
            let b = members[j];
            for c in [g.add(a, b), g.add(b, a)] {
                if !std::mem::replace(&mut inside[c], true) {
                    members.push(c);
                }
            }
        }
        i += 1;
    }
    members.sort_unstable();
    Ok(SubSet::from_sorted(n, members))
}

/// Subgyrogroup criterion: contains 0 and is closed under `⊕` and `⊖`.
pub fn is_subgyrogroup(g: &GyroTable, s: &SubSet) -> bool {
    if s.parent_order() != g.order() || !s.contains(0) {
        return false;
    }
    let mask = s.mask();
    s.members()
        .iter()
        .all(|&a| mask[g.neg(a)] && s.members().iter().all(|&b| mask[g.add(a, b)]))
}

fn require_subgyrogroup(g: &GyroTable, s: &SubSet) -> Result<()> {
    if is_subgyrogroup(g, s) {
        Ok(())
    } else {
        Err(GyroError::NotSubgyrogroup {
            members: s.members().to_vec(),
        })
    }
}

/// `gyr[a,h](H) = H` for all `a ∈ G`, `h ∈ H`.
pub fn is_l_subgyrogroup(g: &GyroTable, h: &SubSet) -> Result<bool> {
    require_subgyrogroup(g, h)?;
    let mask = h.mask();
    // gyr[a,h] is a bijection, so mapping H into H means onto H.
    Ok(g.elements().all(|a| {
        h.members()
            .iter()
            .all(|&x| h.members().iter().all(|&y| mask[g.gyr_apply(a, x, y)]))
    }))
}

/// Whether `⊕` restricted to `H` is associative, i.e. `H` forms a group.
pub fn is_subgroup(g: &GyroTable, h: &SubSet) -> Result<bool> {
    require_subgyrogroup(g, h)?;
    Ok(associativity_violation(g, h).is_none())
}

/// First triple of `H` on which `⊕` fails to associate.
pub fn associativity_violation(g: &GyroTable, h: &SubSet) -> Option<(Elem, Elem, Elem)> {
    let m = h.members();
    for &a in m {
        for &b in m {
            for &c in m {
                if g.add(a, g.add(b, c)) != g.add(g.add(a, b), c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// `a ⊕ H` as an ascending list.
pub fn left_coset(g: &GyroTable, a: Elem, h: &SubSet) -> Vec<Elem> {
    let mut c: Vec<Elem> = h.members().iter().map(|&x| g.add(a, x)).collect();
    c.sort_unstable();
    c
}

/// `H ⊕ a` as an ascending list.
pub fn right_coset(g: &GyroTable, h: &SubSet, a: Elem) -> Vec<Elem> {
    let mut c: Vec<Elem> = h.members().iter().map(|&x| g.add(x, a)).collect();
    c.sort_unstable();
    c
}

/// The family `{a ⊕ H}`; fails with [`GyroError::NotPartition`] when two
/// cosets overlap without being equal.
pub fn left_cosets(g: &GyroTable, h: &SubSet) -> Result<CosetFamily> {
    require_subgyrogroup(g, h)?;
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets: Vec<Vec<Elem>> = Vec::new();
    for a in g.elements() {
        if coset_of[a] != usize::MAX {
            // a ∈ some earlier coset; a ⊕ H must equal it.
            let c = left_coset(g, a, h);
            let k = coset_of[a];
            if c != cosets[k] {
                return Err(GyroError::NotPartition {
                    first: cosets[k].clone(),
                    second: c,
                });
            }
            continue;
        }
        let c = left_coset(g, a, h);
        if let Some(&x) = c.iter().find(|&&x| coset_of[x] != usize::MAX) {
            return Err(GyroError::NotPartition {
                first: cosets[coset_of[x]].clone(),
                second: c,
            });
        }
        let k = cosets.len();
        for &x in &c {
            coset_of[x] = k;
        }
        cosets.push(c);
    }
    // Built in order of least unseen element, which is each coset's minimum.
    Ok(CosetFamily {
        subgroup: h.clone(),
        cosets,
        coset_of,
    })
}

/// `[G : H]`, defined when the left cosets partition `G`.
pub fn index(g: &GyroTable, h: &SubSet) -> Result<usize> {
    Ok(left_cosets(g, h)?.len())
}

/// Every subgyrogroup, as the join-closure of cyclic subgyrogroups, sorted
/// by size and then lexicographically.
pub fn enumerate_subgyrogroups(g: &GyroTable, lattice_cap: usize) -> Result<Vec<SubSet>> {
    if g.order() > lattice_cap {
        return Err(GyroError::CapExceeded {
            what: "lattice order",
            cap: lattice_cap,
            reached: g.order(),
        });
    }
    let mut all: BTreeSet<SubSet> = BTreeSet::new();
    for a in g.elements() {
        all.insert(generate(g, &[a])?);
    }
    let atoms: Vec<SubSet> = all.iter().cloned().collect();
    let mut frontier: Vec<SubSet> = atoms.clone();
    while !frontier.is_empty() {
        let joins: BTreeSet<SubSet> = frontier
            .par_iter()
            .flat_map_iter(|s| {
                atoms.iter().map(move |t| {
                    let mut seed = s.members().to_vec();
                    seed.extend_from_slice(t.members());
                    generate(g, &seed).expect("members are in range")
                })
            })
            .collect();
        frontier = joins
            .into_iter()
            .filter(|s| all.insert(s.clone()))
            .collect();
    }
    let mut out: Vec<SubSet> = all.into_iter().collect();
    out.sort_by(|x, y| (x.len(), x.members()).cmp(&(y.len(), y.members())));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::{cyclic, symmetric3};

    fn set(g: &GyroTable, xs: &[Elem]) -> SubSet {
        SubSet::new(g.order(), xs.iter().copied()).unwrap()
    }

    #[test]
    fn generate_examples() {
        let z4 = cyclic(4);
        assert_eq!(generate(&z4, &[2]).unwrap().members(), &[0, 2]);
        assert_eq!(generate(&z4, &[0]).unwrap().members(), &[0]);
        assert_eq!(generate(&z4, &[1]).unwrap().members(), &[0, 1, 2, 3]);
        assert!(generate(&z4, &[4]).is_err());
    }

    #[test]
    fn subgyrogroup_predicate() {
        let z4 = cyclic(4);
        assert!(is_subgyrogroup(&z4, &set(&z4, &[0, 2])));
        assert!(!is_subgyrogroup(&z4, &set(&z4, &[0, 1])));
        assert!(!is_subgyrogroup(&z4, &set(&z4, &[2])));
        assert!(matches!(
            is_subgroup(&z4, &set(&z4, &[0, 1])),
            Err(GyroError::NotSubgyrogroup { .. })
        ));
        assert!(is_subgroup(&z4, &SubSet::whole(&z4)).unwrap());
        assert!(is_subgroup(&z4, &SubSet::zero(&z4)).unwrap());
    }

    #[test]
    fn z6_cosets() {
        let z6 = cyclic(6);
        let fam = left_cosets(&z6, &set(&z6, &[0, 3])).unwrap();
        assert_eq!(fam.cosets, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(fam.representatives(), vec![0, 1, 2]);
        assert_eq!(index(&z6, &set(&z6, &[0, 3])).unwrap(), 3);
        assert_eq!(index(&z6, &set(&z6, &[0, 2, 4])).unwrap(), 2);
        assert_eq!(index(&z6, &SubSet::whole(&z6)).unwrap(), 1);
    }

    #[test]
    fn lattice_examples() {
        let z4 = cyclic(4);
        let lat = enumerate_subgyrogroups(&z4, 64).unwrap();
        let got: Vec<&[Elem]> = lat.iter().map(|s| s.members()).collect();
        assert_eq!(got, vec![&[0][..], &[0, 2], &[0, 1, 2, 3]]);
        assert_eq!(
            enumerate_subgyrogroups(&GyroTable::trivial(), 64)
                .unwrap()
                .len(),
            1
        );
        assert!(enumerate_subgyrogroups(&z4, 3).is_err());
    }

    #[test]
    fn s3_lattice_by_brute_force() {
        // Oracle: test every subset for closure.
        let g = symmetric3();
        let mut brute = Vec::new();
        for mask in 0u32..(1 << 6) {
            let s = SubSet::new(6, (0..6).filter(|i| mask >> i & 1 == 1)).unwrap();
            if is_subgyrogroup(&g, &s) {
                brute.push(s);
            }
        }
        brute.sort_by(|x, y| (x.len(), x.members()).cmp(&(y.len(), y.members())));
        let lat = enumerate_subgyrogroups(&g, 64).unwrap();
        assert_eq!(lat, brute);
        assert_eq!(lat.len(), 6);
    }
}
