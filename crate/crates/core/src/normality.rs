//! Normality decided by explicit quotient construction, homomorphisms,
//! kernels and images, intersections and normal closures.
//!
//! A subgyrogroup is normal when it is the kernel of a homomorphism. The
//! decision procedure builds the candidate projection `G → G/N` and checks
//! that it is a homomorphism onto a gyrogroup whose kernel is `N`; any
//! kernel passes every step because its cosets are the fibers of the map.

use std::fmt;

use rayon::prelude::*;

use crate::caps::Caps;
use crate::error::{GyroError, Result};
use crate::substructure::{
    enumerate_subgyrogroups, is_subgyrogroup, left_coset, left_cosets, right_coset, CosetFamily,
    SubSet,
};
use crate::table::{AxiomReport, Elem, GyroTable};

/// Why a subgyrogroup is not normal; the first failed step of [`try_quotient`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotNormal {
    /// `gyr[a,b]x ∉ N` for `x ∈ N`.
    GyrationEscapes { a: Elem, b: Elem, x: Elem },
    /// Two left cosets overlap without being equal.
    CosetsOverlap { first: Vec<Elem>, second: Vec<Elem> },
    /// `a ≡ a'`, `b ≡ b'` but `a ⊕ b ≢ a' ⊕ b'`.
    OperationNotWellDefined {
        a: Elem,
        a2: Elem,
        b: Elem,
        b2: Elem,
    },
    /// The coset of `gyr[a,b]c` changes with the representatives.
    GyrationNotInduced {
        a: Elem,
        b: Elem,
        c: Elem,
        a2: Elem,
        b2: Elem,
        c2: Elem,
    },
    /// The induced coset table is not a gyrogroup.
    QuotientAxioms(Box<AxiomReport>),
}

impl fmt::Display for NotNormal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotNormal::GyrationEscapes { a, b, x } => {
                write!(f, "gyr[{a},{b}]({x}) leaves the subset")
            }
            NotNormal::CosetsOverlap { first, second } => {
                write!(f, "cosets {first:?} and {second:?} overlap")
            }
            NotNormal::OperationNotWellDefined { a, a2, b, b2 } => write!(
                f,
                "coset sum depends on representatives: {a}+{b} vs {a2}+{b2}"
            ),
            NotNormal::GyrationNotInduced {
                a,
                b,
                c,
                a2,
                b2,
                c2,
            } => write!(
                f,
                "gyration does not descend: gyr[{a},{b}]{c} vs gyr[{a2},{b2}]{c2}"
            ),
            NotNormal::QuotientAxioms(rep) => {
                write!(
                    f,
                    "coset table fails axioms ({} violations)",
                    rep.violations.len()
                )
            }
        }
    }
}

/// A verified homomorphism, stored as its value list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hom {
    map: Vec<Elem>,
    codomain_order: usize,
}

impl Hom {
    /// Verifies `map(a ⊕ b) = map(a) ⊕ map(b)` over all pairs.
    pub fn new(map: Vec<Elem>, domain: &GyroTable, codomain: &GyroTable) -> Result<Hom> {
        if map.len() != domain.order() {
            return Err(GyroError::Malformed(format!(
                "map has {} values for a domain of order {}",
                map.len(),
                domain.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= codomain.order()) {
            return Err(GyroError::OutOfRange {
                elem: bad,
                order: codomain.order(),
            });
        }
        if let Some((a, b)) = hom_violation(&map, domain, codomain) {
            return Err(GyroError::NotHom { a, b });
        }
        Ok(Hom {
            map,
            codomain_order: codomain.order(),
        })
    }

    pub fn identity(g: &GyroTable) -> Hom {
        Hom {
            map: g.elements().collect(),
            codomain_order: g.order(),
        }
    }

    pub fn zero(g: &GyroTable, codomain: &GyroTable) -> Hom {
        Hom {
            map: vec![0; g.order()],
            codomain_order: codomain.order(),
        }
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    pub fn values(&self) -> &[Elem] {
        &self.map
    }

    pub fn domain_order(&self) -> usize {
        self.map.len()
    }

    pub fn codomain_order(&self) -> usize {
        self.codomain_order
    }
}

/// First pair with `φ(a ⊕ b) != φ(a) ⊕ φ(b)`.
pub fn hom_violation(map: &[Elem], g: &GyroTable, k: &GyroTable) -> Option<(Elem, Elem)> {
    for a in g.elements() {
        for b in g.elements() {
            if map[g.add(a, b)] != k.add(map[a], map[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Whether `map` is a homomorphism `G → K`. On success the induced identity
/// `φ(gyr[a,b]c) = gyr[φa, φb]φc` is also asserted.
pub fn check_hom(map: &[Elem], g: &GyroTable, k: &GyroTable) -> bool {
    if map.len() != g.order() || map.iter().any(|&x| x >= k.order()) {
        return false;
    }
    if hom_violation(map, g, k).is_some() {
        return false;
    }
    for a in g.elements() {
        for b in g.elements() {
            for c in g.elements() {
                assert_eq!(
                    map[g.gyr_apply(a, b, c)],
                    k.gyr_apply(map[a], map[b], map[c]),
                    "homomorphism fails to commute with gyr[{a},{b}] at {c}"
                );
            }
        }
    }
    true
}

/// `{a : φ(a) = 0}`.
pub fn kernel(phi: &Hom) -> SubSet {
    let members = (0..phi.domain_order())
        .filter(|&a| phi.apply(a) == 0)
        .collect();
    SubSet::from_sorted(phi.domain_order(), members)
}

/// `{φ(a)}` as a subset of the codomain.
pub fn image(phi: &Hom) -> SubSet {
    SubSet::new(phi.codomain_order(), phi.values().iter().copied()).expect("values in range")
}

/// `G/N` with its table on coset indices and the projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub normal: SubSet,
    pub cosets: CosetFamily,
    pub table: GyroTable,
    pub projection: Hom,
}

/// Build `G/N` or report the first failed step.
///
/// Steps: gyration invariance of `N`; left cosets partition `G`; the coset
/// sum is independent of representatives; gyrations descend to cosets; the
/// coset table satisfies the axioms. Fails with [`GyroError::NotNormal`]
/// carrying the witness, or [`GyroError::NotSubgyrogroup`].
pub fn try_quotient(g: &GyroTable, n: &SubSet) -> Result<Quotient> {
    if !is_subgyrogroup(g, n) {
        return Err(GyroError::NotSubgyrogroup {
            members: n.members().to_vec(),
        });
    }
    let mask = n.mask();
    for a in g.elements() {
        for b in g.elements() {
            for &x in n.members() {
                if !mask[g.gyr_apply(a, b, x)] {
                    return Err(GyroError::NotNormal(NotNormal::GyrationEscapes { a, b, x }));
                }
            }
        }
    }
    let fam = match left_cosets(g, n) {
        Ok(f) => f,
        Err(GyroError::NotPartition { first, second }) => {
            return Err(GyroError::NotNormal(NotNormal::CosetsOverlap {
                first,
                second,
            }))
        }
        Err(e) => return Err(e),
    };
    let reps = fam.representatives();
    let of = &fam.coset_of;

    for a in g.elements() {
        for b in g.elements() {
            let (ra, rb) = (reps[of[a]], reps[of[b]]);
            if of[g.add(a, b)] != of[g.add(ra, rb)] {
                return Err(GyroError::NotNormal(NotNormal::OperationNotWellDefined {
                    a: ra,
                    a2: a,
                    b: rb,
                    b2: b,
                }));
            }
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            for c in g.elements() {
                let (ra, rb, rc) = (reps[of[a]], reps[of[b]], reps[of[c]]);
                if of[g.gyr_apply(a, b, c)] != of[g.gyr_apply(ra, rb, rc)] {
                    return Err(GyroError::NotNormal(NotNormal::GyrationNotInduced {
                        a: ra,
                        b: rb,
                        c: rc,
                        a2: a,
                        b2: b,
                        c2: c,
                    }));
                }
            }
        }
    }

    let q = reps.len();
    let cells: Vec<u32> = (0..q * q)
        .map(|k| of[g.add(reps[k / q], reps[k % q])] as u32)
        .collect();
    let table = match GyroTable::from_cells(q, cells) {
        Ok(t) => t,
        Err(GyroError::Axioms(rep)) => {
            return Err(GyroError::NotNormal(NotNormal::QuotientAxioms(rep)))
        }
        Err(e) => return Err(e),
    };
    let projection = Hom::new(of.clone(), g, &table)?;
    if kernel(&projection) != *n {
        return Err(GyroError::Inconsistent(
            "projection kernel differs from the normal subset".into(),
        ));
    }
    Ok(Quotient {
        normal: n.clone(),
        cosets: fam,
        table,
        projection,
    })
}

/// Whether `N` is the kernel of some homomorphism, decided by [`try_quotient`].
pub fn is_normal(g: &GyroTable, n: &SubSet) -> Result<bool> {
    match try_quotient(g, n) {
        Ok(_) => Ok(true),
        Err(GyroError::NotNormal(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// All normal subgyrogroups, in lattice order.
pub fn normal_subgyrogroups(g: &GyroTable, caps: &Caps) -> Result<Vec<SubSet>> {
    let lattice = enumerate_subgyrogroups(g, caps.lattice)?;
    let flags: Vec<bool> = lattice
        .par_iter()
        .map(|s| is_normal(g, s))
        .collect::<Result<_>>()?;
    Ok(lattice
        .into_iter()
        .zip(flags)
        .filter_map(|(s, keep)| keep.then_some(s))
        .collect())
}

/// Intersection of normal subgyrogroups.
///
/// Computed twice: as a plain set intersection and as the kernel of
/// `a ↦ (Π_i(a))_i` into the direct product of the quotients. The product
/// operation is componentwise, so the map is checked to be a homomorphism
/// coordinate by coordinate without materializing the product table. The
/// two sets must agree and the result must be normal.
pub fn intersect_normals(g: &GyroTable, ns: &[SubSet]) -> Result<SubSet> {
    let mut quotients = Vec::with_capacity(ns.len());
    for n in ns {
        match try_quotient(g, n) {
            Ok(q) => quotients.push(q),
            Err(GyroError::NotNormal(w)) => {
                return Err(GyroError::Precondition(format!(
                    "{:?} is not normal: {w}",
                    n.members()
                )))
            }
            Err(e) => return Err(e),
        }
    }
    let plain = ns.iter().fold(SubSet::whole(g), |acc, n| acc.intersect(n));

    let tuple =
        |a: Elem| -> Vec<Elem> { quotients.iter().map(|q| q.projection.apply(a)).collect() };
    for a in g.elements() {
        for b in g.elements() {
            let (ta, tb, tab) = (tuple(a), tuple(b), tuple(g.add(a, b)));
            let componentwise = quotients
                .iter()
                .enumerate()
                .all(|(i, q)| q.table.add(ta[i], tb[i]) == tab[i]);
            if !componentwise {
                return Err(GyroError::NotHom { a, b });
            }
        }
    }
    let via_kernel = SubSet::from_sorted(
        g.order(),
        g.elements()
            .filter(|&a| tuple(a).iter().all(|&x| x == 0))
            .collect(),
    );
    if via_kernel != plain {
        return Err(GyroError::Inconsistent(format!(
            "kernel of product map {:?} differs from intersection {:?}",
            via_kernel.members(),
            plain.members()
        )));
    }
    if !is_normal(g, &plain)? {
        return Err(GyroError::Inconsistent(
            "intersection of normal subgyrogroups is not normal".into(),
        ));
    }
    Ok(plain)
}

/// `NC(A)`: the intersection of all normal subgyrogroups containing `A`.
pub fn normal_closure(g: &GyroTable, seed: &[Elem], caps: &Caps) -> Result<SubSet> {
    if seed.is_empty() {
        return Err(GyroError::Precondition(
            "normal closure of an empty set".into(),
        ));
    }
    let a = SubSet::new(g.order(), seed.iter().copied())?;
    let normals = normal_subgyrogroups(g, caps)?;
    let containing: Vec<&SubSet> = normals.iter().filter(|n| a.is_subset_of(n)).collect();
    let nc = containing
        .iter()
        .fold(SubSet::whole(g), |acc, n| acc.intersect(n));
    if !a.is_subset_of(&nc) || !is_normal(g, &nc)? {
        return Err(GyroError::Inconsistent(format!(
            "normal closure {:?} fails containment or normality",
            nc.members()
        )));
    }
    Ok(nc)
}

/// The three-part sufficient condition for normality: `gyr[h,a] = id`,
/// `gyr[a,b](H) ⊆ H` and `a ⊕ H = H ⊕ a`. A positive answer is
/// cross-checked against [`is_normal`].
pub fn check_sufficient_normality(g: &GyroTable, h: &SubSet) -> Result<bool> {
    if !is_subgyrogroup(g, h) {
        return Err(GyroError::NotSubgyrogroup {
            members: h.members().to_vec(),
        });
    }
    let mask = h.mask();
    let left_trivial = h
        .members()
        .iter()
        .all(|&x| g.elements().all(|a| g.gyr(x, a).is_identity()));
    let invariant = left_trivial
        && g.elements().all(|a| {
            g.elements()
                .all(|b| h.members().iter().all(|&x| mask[g.gyr_apply(a, b, x)]))
        });
    let symmetric = invariant
        && g.elements()
            .all(|a| left_coset(g, a, h) == right_coset(g, h, a));
    if symmetric && !is_normal(g, h)? {
        return Err(GyroError::Inconsistent(format!(
            "{:?} satisfies the sufficient condition but is not normal",
            h.members()
        )));
    }
    Ok(symmetric)
}

/// The map `G/ker φ → im φ` induced by `φ`, checked to be a bijective
/// homomorphism onto the image.
pub fn induced_isomorphism(g: &GyroTable, k: &GyroTable, phi: &Hom) -> Result<Hom> {
    let q = try_quotient(g, &kernel(phi))?;
    let reps = q.cosets.representatives();
    let values: Vec<Elem> = reps.iter().map(|&r| phi.apply(r)).collect();
    for a in g.elements() {
        if values[q.projection.apply(a)] != phi.apply(a) {
            return Err(GyroError::Inconsistent(
                "φ is not constant on the cosets of its kernel".into(),
            ));
        }
    }
    let img = image(phi);
    let mut sorted = values.clone();
    sorted.sort_unstable();
    if sorted != img.members() {
        return Err(GyroError::Inconsistent(
            "induced map is not a bijection onto the image".into(),
        ));
    }
    Hom::new(values, &q.table, k)
}
