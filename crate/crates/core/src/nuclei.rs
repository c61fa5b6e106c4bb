//! Nuclei, left gyrotranslations, the left multiplication group and the
//! subsets of it built from `L(G) = {L_a}`: `L(G)^#`, `L(G)′` and the radical.

use std::collections::{HashSet, VecDeque};

use crate::caps::Caps;
use crate::error::{GyroError, Result};
use crate::normality::is_normal;
use crate::perm::Perm;
use crate::substructure::{is_subgroup, SubSet};
use crate::table::{Elem, GyroTable};

/// A finite permutation group, materialized as a sorted element list.
#[derive(Debug, Clone)]
pub struct PermGroup {
    pub degree: usize,
    pub generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Breadth-first closure of `generators` under composition.
    pub fn generate(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<PermGroup> {
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for gen in &generators {
                let q = p.compose(gen);
                if !seen.contains(&q) {
                    if seen.len() >= cap {
                        return Err(GyroError::CapExceeded {
                            what: "permutation group",
                            cap,
                            reached: seen.len(),
                        });
                    }
                    seen.insert(q.clone());
                    queue.push_back(q);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Whether a sorted subset is invariant under conjugation by every
    /// generator (and hence by the whole group).
    pub fn normalizes(&self, subset: &[Perm]) -> bool {
        self.generators.iter().all(|g| {
            subset
                .iter()
                .all(|s| subset.binary_search(&g.conjugate(s)).is_ok())
        })
    }
}

/// Whether a sorted set of permutations is closed under composition and
/// inverses and contains the identity.
pub fn is_perm_subgroup(set: &[Perm]) -> bool {
    let Some(first) = set.first() else {
        return false;
    };
    let has = |p: &Perm| set.binary_search(p).is_ok();
    has(&Perm::identity(first.degree()))
        && set.iter().all(|x| has(&x.inverse()))
        && set.iter().all(|x| set.iter().all(|y| has(&x.compose(y))))
}

/// `L_a` for every `a`, in element order.
pub fn left_translations(g: &GyroTable) -> Vec<Perm> {
    g.elements().map(|a| g.left_translation(a)).collect()
}

/// `lmlt(G) = ⟨L_a : a ∈ G⟩`.
pub fn lmlt(g: &GyroTable, cap: usize) -> Result<PermGroup> {
    PermGroup::generate(g.order(), left_translations(g), cap)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistedFailure {
    Identity,
    Inverse,
    Xyx,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedReport {
    pub is_twisted: bool,
    /// `(x, y, kind)`; for `Identity` both are the identity, for `Inverse`
    /// `y = x`.
    pub violations: Vec<(Perm, Perm, TwistedFailure)>,
}

/// Check that `X` contains the identity and is closed under `x ↦ x⁻¹` and
/// `(x, y) ↦ xyx`. `X` must lie inside `gamma`.
pub fn is_twisted_subgroup(gamma: &PermGroup, x: &[Perm]) -> Result<TwistedReport> {
    if let Some(p) = x.iter().find(|p| !gamma.contains(p)) {
        return Err(GyroError::Precondition(format!(
            "{p:?} is not an element of the ambient group"
        )));
    }
    let set: HashSet<&Perm> = x.iter().collect();
    let mut violations = Vec::new();
    let id = Perm::identity(gamma.degree);
    if !set.contains(&id) {
        violations.push((id.clone(), id, TwistedFailure::Identity));
    }
    for p in x {
        if !set.contains(&p.inverse()) {
            violations.push((p.clone(), p.clone(), TwistedFailure::Inverse));
        }
    }
    for p in x {
        for q in x {
            if !set.contains(&p.compose(q).compose(p)) {
                violations.push((p.clone(), q.clone(), TwistedFailure::Xyx));
            }
        }
    }
    Ok(TwistedReport {
        is_twisted: violations.is_empty(),
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Nucleus {
    Left,
    Middle,
    Right,
}

fn nucleus(g: &GyroTable, which: Nucleus) -> Result<SubSet> {
    let assoc = |a: Elem, b: Elem, c: Elem| g.add(a, g.add(b, c)) == g.add(g.add(a, b), c);
    let els = || g.elements();
    let by_assoc: Vec<Elem> = els()
        .filter(|&x| match which {
            Nucleus::Left => els().all(|b| els().all(|c| assoc(x, b, c))),
            Nucleus::Middle => els().all(|a| els().all(|c| assoc(a, x, c))),
            Nucleus::Right => els().all(|a| els().all(|b| assoc(a, b, x))),
        })
        .collect();
    let by_gyr: Vec<Elem> = els()
        .filter(|&x| match which {
            Nucleus::Left => els().all(|b| g.gyr(x, b).is_identity()),
            Nucleus::Middle => els().all(|a| g.gyr(a, x).is_identity()),
            Nucleus::Right => els().all(|a| els().all(|b| g.gyr_apply(a, b, x) == x)),
        })
        .collect();
    if by_assoc != by_gyr {
        return Err(GyroError::Inconsistent(format!(
            "{which:?} nucleus: associativity form {by_assoc:?} != gyration form {by_gyr:?}"
        )));
    }
    Ok(SubSet::from_sorted(g.order(), by_assoc))
}

/// `N_l(G)`, computed from associativity and from trivial gyrations; the two
/// must agree.
pub fn left_nucleus(g: &GyroTable) -> Result<SubSet> {
    nucleus(g, Nucleus::Left)
}

pub fn middle_nucleus(g: &GyroTable) -> Result<SubSet> {
    nucleus(g, Nucleus::Middle)
}

pub fn right_nucleus(g: &GyroTable) -> Result<SubSet> {
    nucleus(g, Nucleus::Right)
}

fn sorted(mut v: Vec<Perm>) -> Vec<Perm> {
    v.sort_unstable();
    v.dedup();
    v
}

/// `L(G)^# = ⋂_a L_a L(G)`, evaluated as a set intersection inside `lmlt`.
///
/// Verified on return: contained in `L(G)`, a subgroup, normal in `lmlt`,
/// and equal to `L(N_l(G))`.
pub fn lg_sharp(g: &GyroTable, lmlt: &PermGroup) -> Result<Vec<Perm>> {
    let ls = left_translations(g);
    let lg: HashSet<&Perm> = ls.iter().collect();
    let mut acc: Vec<Perm> = sorted(ls.clone());
    for la in &ls {
        let coset: HashSet<Perm> = ls.iter().map(|lb| la.compose(lb)).collect();
        acc.retain(|p| coset.contains(p));
    }
    if !acc.iter().all(|p| lg.contains(p) && lmlt.contains(p)) {
        return Err(GyroError::Inconsistent("L(G)^# escapes L(G)".into()));
    }
    if !is_perm_subgroup(&acc) || !lmlt.normalizes(&acc) {
        return Err(GyroError::Inconsistent(
            "L(G)^# is not a normal subgroup of lmlt(G)".into(),
        ));
    }
    let nl = left_nucleus(g)?;
    let l_nl = sorted(nl.members().iter().map(|&a| ls[a].clone()).collect());
    if l_nl != acc {
        return Err(GyroError::Inconsistent(
            "L(G)^# differs from L(N_l(G))".into(),
        ));
    }
    Ok(acc)
}

/// `L(G)′`: forward products `L_{a1} ∘ … ∘ L_{ak}` of words whose reversed
/// product `L_{ak} ∘ … ∘ L_{a1}` is the identity.
///
/// Each word maps to the pair `(L_{a1}∘…∘L_{ak}, (L_{ak}∘…∘L_{a1})⁻¹)`, and
/// concatenating words multiplies pairs componentwise. So the pairs form
/// the subgroup of `lmlt × lmlt` generated by `(L_a, L_a⁻¹)`, and `L(G)′` is
/// the set of first coordinates whose second coordinate is the identity.
///
/// Verified on return: a subgroup, normal in `lmlt`, contained in `sharp`.
pub fn lg_prime(
    g: &GyroTable,
    lmlt: &PermGroup,
    sharp: &[Perm],
    pair_cap: usize,
) -> Result<Vec<Perm>> {
    let gens: Vec<(Perm, Perm)> = left_translations(g)
        .into_iter()
        .map(|l| {
            let inv = l.inverse();
            (l, inv)
        })
        .collect();
    let id = Perm::identity(g.order());
    let start = (id.clone(), id.clone());
    let mut seen: HashSet<(Perm, Perm)> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((f, s)) = queue.pop_front() {
        for (gf, gs) in &gens {
            let next = (f.compose(gf), s.compose(gs));
            if !seen.contains(&next) {
                if seen.len() >= pair_cap {
                    return Err(GyroError::CapExceeded {
                        what: "doubled-group pair closure",
                        cap: pair_cap,
                        reached: seen.len(),
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let result = sorted(
        seen.into_iter()
            .filter(|(_, s)| *s == id)
            .map(|(f, _)| f)
            .collect(),
    );
    if !is_perm_subgroup(&result) || !lmlt.normalizes(&result) {
        return Err(GyroError::Inconsistent(
            "L(G)' is not a normal subgroup of lmlt(G)".into(),
        ));
    }
    if !result.iter().all(|p| sharp.binary_search(p).is_ok()) {
        return Err(GyroError::Inconsistent("L(G)' is not inside L(G)^#".into()));
    }
    Ok(result)
}

/// Test oracle for [`lg_prime`]: enumerate every word of length
/// `1..=max_len` and keep forward products whose reversed product is the
/// identity. Cost is `n^max_len`.
pub fn lg_prime_by_words(g: &GyroTable, max_len: usize) -> Vec<Perm> {
    fn walk(
        ls: &[Perm],
        forward: &Perm,
        reversed: &Perm,
        depth: usize,
        max_len: usize,
        out: &mut HashSet<Perm>,
    ) {
        if depth > 0 && reversed.is_identity() {
            out.insert(forward.clone());
        }
        if depth == max_len {
            return;
        }
        for l in ls {
            walk(
                ls,
                &forward.compose(l),
                &l.compose(reversed),
                depth + 1,
                max_len,
                out,
            );
        }
    }
    let ls = left_translations(g);
    let id = Perm::identity(g.order());
    let mut out = HashSet::new();
    walk(&ls, &id, &id, 0, max_len, &mut out);
    sorted(out.into_iter().collect())
}

/// `Rad(G) = {a : L_a ∈ L(G)′}` given a computed `L(G)′`.
///
/// Verified on return: inside `N_l(G)`, a subgroup, and normal.
pub fn radical_from(g: &GyroTable, lg_prime: &[Perm]) -> Result<SubSet> {
    let members: Vec<Elem> = g
        .elements()
        .filter(|&a| lg_prime.binary_search(&g.left_translation(a)).is_ok())
        .collect();
    let rad = SubSet::from_sorted(g.order(), members);
    let nl = left_nucleus(g)?;
    if !rad.is_subset_of(&nl) {
        return Err(GyroError::Inconsistent(
            "Rad(G) is not inside N_l(G)".into(),
        ));
    }
    if !is_subgroup(g, &rad)? || !is_normal(g, &rad)? {
        return Err(GyroError::Inconsistent(
            "Rad(G) is not a normal subgroup".into(),
        ));
    }
    Ok(rad)
}

/// The permutation-group layer of one gyrogroup, computed once.
#[derive(Debug, Clone)]
pub struct PermLayer {
    pub lmlt: PermGroup,
    pub lg_sharp: Vec<Perm>,
    pub lg_prime: Vec<Perm>,
    pub radical: SubSet,
}

pub fn perm_layer(g: &GyroTable, caps: &Caps) -> Result<PermLayer> {
    let lmlt = lmlt(g, caps.perm_group)?;
    let sharp = lg_sharp(g, &lmlt)?;
    let prime = lg_prime(g, &lmlt, &sharp, caps.pair_closure)?;
    let radical = radical_from(g, &prime)?;
    Ok(PermLayer {
        lmlt,
        lg_sharp: sharp,
        lg_prime: prime,
        radical,
    })
}

/// `Rad(G)` from scratch.
pub fn radical(g: &GyroTable, caps: &Caps) -> Result<SubSet> {
    Ok(perm_layer(g, caps)?.radical)
}
