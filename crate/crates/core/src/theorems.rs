//! The full invariant suite for one gyrogroup, with a deterministic text
//! report. Every check is exhaustive over the table.

use std::fmt::Write as _;

use crate::caps::Caps;
use crate::commutator::{
    check_universal_property, commutator, commutator_subgyrogroup, commutators, nc_commutator,
};
use crate::error::{GyroError, Result};
use crate::normality::{
    check_sufficient_normality, induced_isomorphism, intersect_normals, is_normal, try_quotient,
    Hom, Quotient,
};
use crate::nuclei::{
    is_twisted_subgroup, left_nucleus, left_translations, lg_prime_by_words, middle_nucleus,
    perm_layer, right_nucleus, PermLayer,
};
use crate::perm::Perm;
use crate::prime_index::{
    check_condition_n, coset_ladder, equivalence_report, index_two_normality, is_prime,
    normality_by_gyration_invariance, smallest_prime_precondition,
};
use crate::search::{automorphisms, element_order};
use crate::substructure::{
    associativity_violation, enumerate_subgyrogroups, generate, is_l_subgyrogroup, is_subgroup,
    left_coset, left_cosets, right_coset, SubSet,
};
use crate::table::{verify_axioms, Elem, GyroTable};

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub caps: Caps,
    /// Word length for the `L(G)′` enumeration oracle.
    pub word_len: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            caps: Caps::default(),
            word_len: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`sweep`]. Findings are data about the instance, never failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub order: usize,
    pub checks: Vec<Check>,
    pub findings: Vec<(&'static str, String)>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line per check and finding, under a `== label` heading.
    pub fn render(&self, label: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== {label}");
        let _ = writeln!(out, "order {}", self.order);
        for c in &self.checks {
            if c.passed {
                let _ = writeln!(out, "PASS {}", c.name);
            } else {
                let _ = writeln!(out, "FAIL {}: {}", c.name, c.detail);
            }
        }
        for (k, v) in &self.findings {
            let _ = writeln!(out, "finding {k}: {v}");
        }
        out
    }
}

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn pairs(g: &GyroTable) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    g.elements()
        .flat_map(move |a| g.elements().map(move |b| (a, b)))
}

/// Everything the checks share, computed once.
struct Ctx<'a> {
    g: &'a GyroTable,
    opts: &'a SweepOptions,
    translations: Vec<Perm>,
    lattice: Vec<SubSet>,
    quotients: Vec<Quotient>,
    derived: SubSet,
    nc: SubSet,
    nl: SubSet,
    layer: PermLayer,
    auts: Vec<Perm>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a GyroTable, opts: &'a SweepOptions) -> Result<Self> {
        let caps = &opts.caps;
        let lattice = enumerate_subgyrogroups(g, caps.lattice)?;
        let mut quotients = Vec::new();
        for s in &lattice {
            match try_quotient(g, s) {
                Ok(q) => quotients.push(q),
                Err(GyroError::NotNormal(_)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(Ctx {
            g,
            opts,
            translations: left_translations(g),
            derived: commutator_subgyrogroup(g),
            nc: nc_commutator(g, caps)?,
            nl: left_nucleus(g)?,
            layer: perm_layer(g, caps)?,
            auts: automorphisms(g, caps.perm_group)?,
            lattice,
            quotients,
        })
    }

    fn normals(&self) -> impl Iterator<Item = &SubSet> {
        self.quotients.iter().map(|q| &q.normal)
    }
}

type CheckFn = fn(&Ctx, &mut Vec<(&'static str, String)>) -> Outcome;

const CHECKS: &[(&str, CheckFn)] = &[
    ("axioms", axioms),
    ("gyration-left-loop", gyr_left_loop),
    ("gyration-inverse", gyr_inverse),
    ("gyration-translation-form", gyr_translation_form),
    ("gyroassociative-law", gyroassociative_law),
    ("gyrations-are-automorphisms", gyrations_are_automorphisms),
    ("inverse-two-sided-involution", inverse_laws),
    ("integral-multiple-laws", multiple_laws),
    ("order-annihilates", order_annihilates),
    ("group-iff-left-nucleus-whole", group_iff_nucleus),
    ("subgyrogroup-lattice", lattice_laws),
    ("lagrange-for-l-subgyrogroups", lagrange),
    ("trivial-and-whole-normal", extremes_normal),
    ("quotient-projections", quotient_projections),
    ("normal-intersections", normal_intersections),
    ("first-isomorphism", first_isomorphism),
    ("sufficient-normality", sufficient_normality),
    (
        "normal-subgroup-with-gyrocommutative-quotient",
        gyrocommutative_quotient_witness,
    ),
    ("commutator-zero-iff-gyrocommute", commutator_zero),
    ("commutator-negation", commutator_negation),
    ("commutator-homomorphisms", commutator_homs),
    (
        "commutator-automorphism-invariance",
        commutator_automorphisms,
    ),
    ("commutator-trivial-iff-gyrocommutative", commutator_trivial),
    ("commutator-quotients", commutator_quotients),
    ("commutator-subgyrogroup-structure", derived_structure),
    ("normal-closure-of-commutators", nc_laws),
    ("universal-property", universal_property),
    ("nuclei", nuclei),
    ("nucleus-and-radical-lemmas", nucleus_lemmas),
    ("twisted-subgroup", twisted),
    ("translations-meet-stabilizer", translations_meet_stabilizer),
    ("translation-triple", translation_triple),
    ("lg-sharp", lg_sharp_laws),
    ("lg-prime", lg_prime_laws),
    ("radical", radical_laws),
    ("prime-index", prime_index_laws),
];

/// Names of all checks, in report order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Run every check on `g`. A failure to compute the shared structure
/// (for example a cap) is reported as a single failed `setup` check.
pub fn sweep(g: &GyroTable, opts: &SweepOptions) -> SweepReport {
    let mut findings = Vec::new();
    let checks = match Ctx::new(g, opts) {
        Ok(ctx) => CHECKS
            .iter()
            .map(|(name, f)| {
                let r = f(&ctx, &mut findings);
                Check {
                    name,
                    passed: r.is_ok(),
                    detail: r.err().unwrap_or_default(),
                }
            })
            .collect(),
        Err(e) => vec![Check {
            name: "setup",
            passed: false,
            detail: e.to_string(),
        }],
    };
    SweepReport {
        order: g.order(),
        checks,
        findings,
    }
}

fn fmt_set(s: &[Elem]) -> String {
    let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn axioms(c: &Ctx, f: &mut Vec<(&'static str, String)>) -> Outcome {
    let rep = lift(verify_axioms(&c.g.rows()))?;
    ensure(rep.passed, || {
        format!("{} violation(s)", rep.violations.len())
    })?;
    f.push((
        "right-identity-failures",
        fmt_set(&rep.right_identity_failures),
    ));
    let nonid = pairs(c.g)
        .filter(|&(a, b)| !c.g.gyr(a, b).is_identity())
        .count();
    f.push(("nonidentity-gyrations", nonid.to_string()));
    Ok(())
}

fn gyr_left_loop(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    match pairs(g).find(|&(a, b)| g.gyr(g.add(a, b), b) != g.gyr(a, b)) {
        Some((a, b)) => Err(format!("a={a} b={b}")),
        None => Ok(()),
    }
}

fn gyr_inverse(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    match pairs(g).find(|&(a, b)| g.gyr(b, a).compose(g.gyr(a, b)) != Perm::identity(g.order())) {
        Some((a, b)) => Err(format!("a={a} b={b}")),
        None => Ok(()),
    }
}

fn gyr_translation_form(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let (g, ls) = (c.g, &c.translations);
    let bad = pairs(g).find(|&(a, b)| {
        let p = ls[g.add(a, b)].inverse().compose(&ls[a]).compose(&ls[b]);
        &p != g.gyr(a, b)
    });
    match bad {
        Some((a, b)) => Err(format!("a={a} b={b}")),
        None => Ok(()),
    }
}

fn gyroassociative_law(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    for (a, b) in pairs(g) {
        for x in g.elements() {
            if g.add(a, g.add(b, x)) != g.add(g.add(a, b), g.gyr_apply(a, b, x)) {
                return Err(format!("a={a} b={b} c={x}"));
            }
        }
    }
    Ok(())
}

fn gyrations_are_automorphisms(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    for (a, b) in pairs(g) {
        let t = g.gyr(a, b);
        if let Some((x, y)) =
            pairs(g).find(|&(x, y)| t.apply(g.add(x, y)) != g.add(t.apply(x), t.apply(y)))
        {
            return Err(format!("gyr[{a},{b}] at x={x} y={y}"));
        }
    }
    Ok(())
}

fn inverse_laws(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    match g
        .elements()
        .find(|&a| g.neg(g.neg(a)) != a || g.add(a, g.neg(a)) != 0 || g.add(g.neg(a), a) != 0)
    {
        Some(a) => Err(format!("a={a}")),
        None => Ok(()),
    }
}

fn multiple_laws(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    let w = 2 * g.order() as i64;
    for a in g.elements() {
        for m in -w..=w {
            let ma = g.int_multiple(m, a);
            ensure(
                g.int_multiple(-m, a) == g.neg(ma) && g.int_multiple(m, g.neg(a)) == g.neg(ma),
                || format!("negation law at m={m} a={a}"),
            )?;
            for k in -w..=w {
                let ka = g.int_multiple(k, a);
                ensure(g.int_multiple(m + k, a) == g.add(ma, ka), || {
                    format!("sum law at m={m} k={k} a={a}")
                })?;
                ensure(g.int_multiple(m * k, a) == g.int_multiple(m, ka), || {
                    format!("product law at m={m} k={k} a={a}")
                })?;
            }
        }
    }
    Ok(())
}

fn order_annihilates(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    match g
        .elements()
        .find(|&a| g.int_multiple(g.order() as i64, a) != 0)
    {
        Some(a) => Err(format!("a={a}")),
        None => Ok(()),
    }
}

fn group_iff_nucleus(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    ensure(c.g.is_group() == (c.nl.len() == c.g.order()), || {
        format!(
            "is_group={} N_l={}",
            c.g.is_group(),
            fmt_set(c.nl.members())
        )
    })
}

fn lattice_laws(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    for s in &c.lattice {
        ensure(lift(generate(g, s.members()))? == *s, || {
            format!("generate not idempotent on {}", fmt_set(s.members()))
        })?;
        if lift(is_subgroup(g, s))? {
            ensure(associativity_violation(g, s).is_none(), || {
                format!(
                    "subgroup {} has an associativity violation",
                    fmt_set(s.members())
                )
            })?;
        }
    }
    for s in &c.lattice {
        for t in &c.lattice {
            let i = s.intersect(t);
            ensure(
                c.lattice
                    .binary_search_by(|x| (x.len(), x.members()).cmp(&(i.len(), i.members())))
                    .is_ok(),
                || format!("intersection {} missing", fmt_set(i.members())),
            )?;
        }
    }
    Ok(())
}

fn lagrange(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    for s in &c.lattice {
        if lift(is_l_subgyrogroup(g, s))? {
            let fam = lift(left_cosets(g, s))?;
            ensure(fam.len() * s.len() == g.order(), || {
                format!("|H|·[G:H] != |G| for {}", fmt_set(s.members()))
            })?;
        }
    }
    Ok(())
}

fn extremes_normal(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    ensure(lift(is_normal(g, &SubSet::zero(g)))?, || {
        "{0} not normal".into()
    })?;
    ensure(lift(is_normal(g, &SubSet::whole(g)))?, || {
        "G not normal".into()
    })
}

fn quotient_projections(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    for q in &c.quotients {
        let rebuilt = lift(Hom::new(q.projection.values().to_vec(), c.g, &q.table))?;
        ensure(crate::normality::kernel(&rebuilt) == q.normal, || {
            format!("kernel differs for {}", fmt_set(q.normal.members()))
        })?;
    }
    Ok(())
}

fn normal_intersections(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let normals: Vec<SubSet> = c.normals().cloned().collect();
    for (i, s) in normals.iter().enumerate() {
        for t in &normals[i..] {
            let got = lift(intersect_normals(c.g, &[s.clone(), t.clone()]))?;
            ensure(got == s.intersect(t), || {
                "pairwise intersection differs".into()
            })?;
        }
    }
    let all = lift(intersect_normals(c.g, &normals))?;
    ensure(all == SubSet::zero(c.g), || {
        format!("intersection of all normals is {}", fmt_set(all.members()))
    })
}

fn first_isomorphism(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    for q in &c.quotients {
        let iso = lift(induced_isomorphism(g, &q.table, &q.projection))?;
        ensure(
            iso.values().iter().enumerate().all(|(i, &v)| i == v),
            || {
                format!(
                    "induced map of G/{} is not the identity",
                    fmt_set(q.normal.members())
                )
            },
        )?;
    }
    for aut in &c.auts {
        let phi = lift(Hom::new(aut.to_vec(), g, g))?;
        lift(induced_isomorphism(g, g, &phi))?;
    }
    let trivial = GyroTable::trivial();
    lift(induced_isomorphism(g, &trivial, &Hom::zero(g, &trivial)))?;
    Ok(())
}

fn sufficient_normality(c: &Ctx, f: &mut Vec<(&'static str, String)>) -> Outcome {
    let mut misses = Vec::new();
    for s in &c.lattice {
        let sufficient = lift(check_sufficient_normality(c.g, s))?;
        let normal = c.normals().any(|n| n == s);
        if normal && !sufficient {
            misses.push(fmt_set(s.members()));
        }
    }
    ensure(
        lift(check_sufficient_normality(c.g, &SubSet::zero(c.g)))?,
        || "{0} fails the sufficient condition".into(),
    )?;
    f.push((
        "normal-without-sufficient-condition",
        if misses.is_empty() {
            "none".into()
        } else {
            misses.join(" ")
        },
    ));
    Ok(())
}

fn gyrocommutative_quotient_witness(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    for q in &c.quotients {
        if q.table.is_gyrocommutative() && lift(is_subgroup(c.g, &q.normal))? {
            return Ok(());
        }
    }
    Err("no normal subgroup has a gyrocommutative quotient".into())
}

fn commutator_zero(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    let bad = pairs(g).find(|&(a, b)| {
        (commutator(g, a, b) == 0) != (g.add(a, b) == g.gyr_apply(a, b, g.add(b, a)))
    });
    match bad {
        Some((a, b)) => Err(format!("a={a} b={b}")),
        None => Ok(()),
    }
}

fn commutator_negation(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    let bad = pairs(g).find(|&(a, b)| {
        let (na, nb) = (g.neg(a), g.neg(b));
        g.neg(g.add(a, b)) != g.add(g.add(na, nb), commutator(g, na, nb))
    });
    match bad {
        Some((a, b)) => Err(format!("a={a} b={b}")),
        None => Ok(()),
    }
}

fn commutator_homs(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    let mut homs: Vec<(Hom, &GyroTable)> = c
        .quotients
        .iter()
        .map(|q| (q.projection.clone(), &q.table))
        .collect();
    for aut in &c.auts {
        homs.push((lift(Hom::new(aut.to_vec(), g, g))?, g));
    }
    for (phi, k) in &homs {
        if let Some((a, b)) = pairs(g).find(|&(a, b)| {
            phi.apply(commutator(g, a, b)) != commutator(k, phi.apply(a), phi.apply(b))
        }) {
            return Err(format!("a={a} b={b}"));
        }
    }
    Ok(())
}

fn commutator_automorphisms(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let d = c.derived.members();
    for t in &c.auts {
        ensure(t.image_of_set(d) == d, || {
            format!("automorphism {:?} moves G'", t.to_vec())
        })?;
    }
    for (a, b) in pairs(c.g) {
        ensure(c.g.gyr(a, b).image_of_set(d) == d, || {
            format!("gyr[{a},{b}] moves G'")
        })?;
    }
    Ok(())
}

fn commutator_trivial(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    ensure((c.derived.len() == 1) == c.g.is_gyrocommutative(), || {
        format!(
            "G'={} gyrocommutative={}",
            fmt_set(c.derived.members()),
            c.g.is_gyrocommutative()
        )
    })
}

fn commutator_quotients(c: &Ctx, f: &mut Vec<(&'static str, String)>) -> Outcome {
    let comms = commutators(c.g);
    for q in &c.quotients {
        let gc = q.table.is_gyrocommutative();
        let contains = c.derived.is_subset_of(&q.normal);
        let all = comms.iter().all(|&x| q.normal.contains(x));
        ensure(gc == contains && contains == all, || {
            format!(
                "N={} gyrocommutative={gc} G'⊆N={contains} commutators⊆N={all}",
                fmt_set(q.normal.members())
            )
        })?;
    }
    let derived_normal = c.normals().any(|n| *n == c.derived);
    if derived_normal {
        let q = c
            .quotients
            .iter()
            .find(|q| q.normal == c.derived)
            .expect("present");
        ensure(q.table.is_gyrocommutative(), || {
            "G/G' is not gyrocommutative".into()
        })?;
    }
    f.push((
        "commutator-subgyrogroup-normal",
        if derived_normal { "yes" } else { "no" }.into(),
    ));
    Ok(())
}

/// Classical derived subgroup of a group: generated by `a⁻¹ b⁻¹ a b`.
fn classical_derived(g: &GyroTable) -> Result<SubSet> {
    let seed: Vec<Elem> = pairs(g)
        .map(|(a, b)| g.add(g.neg(a), g.add(g.neg(b), g.add(a, b))))
        .collect();
    generate(g, &seed)
}

fn derived_structure(c: &Ctx, f: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    ensure(lift(is_l_subgyrogroup(g, &c.derived))?, || {
        "G' is not an L-subgyrogroup".into()
    })?;
    ensure(lift(is_subgroup(g, &c.derived))?, || {
        "G' is not a subgroup".into()
    })?;
    if g.is_group() {
        let classical = lift(classical_derived(g))?;
        ensure(classical == c.derived, || {
            format!(
                "classical derived {} != G' {}",
                fmt_set(classical.members()),
                fmt_set(c.derived.members())
            )
        })?;
    }
    f.push(("commutator-subgyrogroup", fmt_set(c.derived.members())));
    Ok(())
}

fn nc_laws(c: &Ctx, f: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    let q = c
        .quotients
        .iter()
        .find(|q| q.normal == c.nc)
        .ok_or_else(|| "NC(G') is not normal".to_string())?;
    ensure(q.table.is_gyrocommutative(), || {
        "G/NC(G') is not gyrocommutative".into()
    })?;
    ensure(c.derived.is_subset_of(&c.nc), || {
        "G' is not inside NC(G')".into()
    })?;
    ensure(lift(is_subgroup(g, &c.nc))?, || {
        "NC(G') is not a subgroup".into()
    })?;
    for q in &c.quotients {
        ensure(
            q.table.is_gyrocommutative() == c.nc.is_subset_of(&q.normal),
            || format!("minimality fails at N={}", fmt_set(q.normal.members())),
        )?;
    }
    ensure((c.nc.len() == 1) == g.is_gyrocommutative(), || {
        "NC(G') trivial mismatch".into()
    })?;
    f.push(("normal-closure-of-commutators", fmt_set(c.nc.members())));
    Ok(())
}

fn universal_property(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    for q in c.quotients.iter().filter(|q| q.table.is_gyrocommutative()) {
        lift(check_universal_property(
            g,
            &q.projection,
            &q.table,
            &c.opts.caps,
        ))?;
    }
    let trivial = GyroTable::trivial();
    lift(check_universal_property(
        g,
        &Hom::zero(g, &trivial),
        &trivial,
        &c.opts.caps,
    ))?;
    Ok(())
}

fn nuclei(c: &Ctx, f: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    let nm = lift(middle_nucleus(g))?;
    let nr = lift(right_nucleus(g))?;
    ensure(c.nl == nm, || {
        format!(
            "N_l={} N_m={}",
            fmt_set(c.nl.members()),
            fmt_set(nm.members())
        )
    })?;
    for (name, s) in [("N_l", &c.nl), ("N_m", &nm), ("N_r", &nr)] {
        ensure(lift(is_l_subgyrogroup(g, s))?, || {
            format!("{name} is not an L-subgyrogroup")
        })?;
        ensure(lift(is_subgroup(g, s))?, || {
            format!("{name} is not a subgroup")
        })?;
    }
    ensure(c.normals().any(|n| *n == c.nl), || {
        "N_l is not normal".into()
    })?;
    if !g.is_group() {
        ensure(c.nl.len() < g.order(), || "N_l = G for a non-group".into())?;
    }
    f.push(("left-nucleus", fmt_set(c.nl.members())));
    f.push(("right-nucleus", fmt_set(nr.members())));
    Ok(())
}

fn gyr_invariant_symmetric(g: &GyroTable, s: &SubSet) -> Outcome {
    let d = s.members();
    for (a, b) in pairs(g) {
        ensure(g.gyr(a, b).image_of_set(d) == d, || {
            format!("gyr[{a},{b}] moves {}", fmt_set(d))
        })?;
    }
    for a in g.elements() {
        ensure(left_coset(g, a, s) == right_coset(g, s, a), || {
            format!("{a}⊕H != H⊕{a} for H={}", fmt_set(d))
        })?;
    }
    ensure(lift(check_sufficient_normality(g, s))?, || {
        format!("{} fails the sufficient condition", fmt_set(d))
    })
}

fn nucleus_lemmas(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    gyr_invariant_symmetric(c.g, &c.nl)?;
    gyr_invariant_symmetric(c.g, &c.layer.radical)
}

fn twisted(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let rep = lift(is_twisted_subgroup(&c.layer.lmlt, &c.translations))?;
    ensure(rep.is_twisted, || format!("{:?}", rep.violations.first()))
}

fn translations_meet_stabilizer(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let fixing: Vec<usize> = (0..c.translations.len())
        .filter(|&a| c.translations[a].apply(0) == 0)
        .collect();
    ensure(fixing == [0] && c.translations[0].is_identity(), || {
        format!("translations fixing 0: {fixing:?}")
    })
}

fn translation_triple(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let (g, ls) = (c.g, &c.translations);
    let bad = pairs(g)
        .find(|&(a, b)| ls[a].compose(&ls[b]).compose(&ls[a]) != ls[g.coadd(g.add(a, b), a)]);
    match bad {
        Some((a, b)) => Err(format!("a={a} b={b}")),
        None => Ok(()),
    }
}

fn lg_sharp_laws(c: &Ctx, f: &mut Vec<(&'static str, String)>) -> Outcome {
    let mut expected: Vec<Perm> =
        c.nl.members()
            .iter()
            .map(|&x| c.translations[x].clone())
            .collect();
    expected.sort_unstable();
    ensure(c.layer.lg_sharp == expected, || "L(G)^# != L(N_l)".into())?;
    ensure(c.layer.lmlt.normalizes(&c.layer.lg_sharp), || {
        "L(G)^# is not normal in lmlt".into()
    })?;
    f.push(("lmlt-order", c.layer.lmlt.order().to_string()));
    Ok(())
}

fn lg_prime_laws(c: &Ctx, _: &mut Vec<(&'static str, String)>) -> Outcome {
    let prime = &c.layer.lg_prime;
    ensure(
        prime
            .iter()
            .all(|p| c.layer.lg_sharp.binary_search(p).is_ok()),
        || "L(G)' is not inside L(G)^#".into(),
    )?;
    ensure(c.layer.lmlt.normalizes(prime), || {
        "L(G)' is not normal in lmlt".into()
    })?;
    let words = lg_prime_by_words(c.g, c.opts.word_len);
    ensure(&words == prime, || {
        format!(
            "word oracle found {} elements, closure {}",
            words.len(),
            prime.len()
        )
    })
}

fn radical_laws(c: &Ctx, f: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    let rad = &c.layer.radical;
    ensure(rad.is_subset_of(&c.nl), || "Rad is not inside N_l".into())?;
    ensure(lift(is_subgroup(g, rad))?, || {
        "Rad is not a subgroup".into()
    })?;
    ensure(c.normals().any(|n| n == rad), || "Rad is not normal".into())?;
    if g.is_group() && g.is_commutative() {
        ensure(rad.len() == 1, || {
            "Rad of an abelian group is not {0}".into()
        })?;
    }
    if !g.is_group() {
        ensure(rad.len() < g.order(), || "Rad = G for a non-group".into())?;
    }
    f.push(("radical", fmt_set(rad.members())));
    Ok(())
}

fn prime_index_laws(c: &Ctx, f: &mut Vec<(&'static str, String)>) -> Outcome {
    let g = c.g;
    let mut pairs_seen = 0;
    for h in &c.lattice {
        let Ok(fam) = left_cosets(g, h) else { continue };
        let p = fam.len();
        if !is_prime(p as u64) {
            continue;
        }
        pairs_seen += 1;
        let label = fmt_set(h.members());
        let rep = lift(equivalence_report(g, h))?;
        let witnesses = lift(check_condition_n(g, h))?.witnesses;
        let ns: Vec<String> = witnesses
            .iter()
            .map(|(a, n)| format!("{a}:{}", n.map_or("-".into(), |n| n.to_string())))
            .collect();
        f.push((
            "prime-index-conditions",
            format!(
                "H={label} p={p} holds={} n={}",
                rep.condition_p,
                ns.join(",")
            ),
        ));
        if rep.condition_multiples {
            for a in g.elements().filter(|&a| !h.contains(a)) {
                lift(coset_ladder(g, h, a))?;
            }
        }
        if lift(smallest_prime_precondition(g, h))? {
            let crit = lift(normality_by_gyration_invariance(g, h))?;
            f.push((
                "gyration-invariance-admissible",
                format!("H={label} y={}", fmt_set(&crit.admissible)),
            ));
        }
        if p == 2 {
            lift(index_two_normality(g, h))?;
        }
        if let Some(q) = c.quotients.iter().find(|q| q.normal == *h) {
            let t = &q.table;
            ensure(t.order() == p, || format!("|G/H| != {p} for H={label}"))?;
            ensure(t.is_associative() && t.is_commutative(), || {
                format!("G/H not an abelian group for H={label}")
            })?;
            ensure(element_order(t, 1) == p, || {
                format!("G/H not cyclic for H={label}")
            })?;
        }
    }
    f.push(("prime-index-pairs", pairs_seen.to_string()));
    Ok(())
}
