//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use gyrokit::commutator::{commutator, commutator_subgyrogroup, nc_commutator};
use gyrokit::normality::{is_normal, normal_subgyrogroups, Hom};
use gyrokit::nuclei::{left_nucleus, middle_nucleus, perm_layer, right_nucleus, PermLayer};
use gyrokit::prime_index::{
    equivalence_report, index_two_normality, normality_by_gyration_invariance,
};
use gyrokit::search::{automorphisms, enumerate, enumerate_with, SearchConfig};
use gyrokit::substructure::{is_l_subgyrogroup, is_subgroup};
use gyrokit::{verify_axioms, Caps, GyroTable, Perm, SubSet};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(g: &GyroTable, xs: &[usize]) -> SubSet {
    SubSet::new(g.order(), xs.iter().copied()).unwrap()
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    p.iter().enumerate().for_each(|(i, &x)| inv[x] = i);
    inv
}

/// Whether `s` is closed and associative on its own elements.
fn subgroup_by_definition(r: &Rows, s: &[usize]) -> bool {
    close(r, s) == s
        && s.iter().all(|&a| {
            s.iter()
                .all(|&b| s.iter().all(|&c| r[r[a][b]][c] == r[a][r[b][c]]))
        })
}

fn l_invariant(r: &Rows, s: &[usize]) -> bool {
    let n = r.len();
    (0..n).all(|a| {
        s.iter().all(|&h| {
            let mut img: Vec<usize> = s.iter().map(|&x| gyr(r, a, h, x)).collect();
            img.sort_unstable();
            img == s
        })
    })
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut mutants = 0;
    let mut slowest = Duration::ZERO;
    for (name, g) in corpus() {
        let r = rows(&g);
        let t = Instant::now();
        let rep = verify_axioms(&r).map_err(|e| e.to_string())?;
        slowest = slowest.max(t.elapsed());
        ensure(rep.passed && is_gyrogroup(&r), || {
            format!("{name} fails the axioms")
        })?;
        let n = r.len();
        if n == 1 {
            continue;
        }
        let mut cells = BTreeSet::new();
        while cells.len() < 20.min(n * n) {
            cells.insert((rng.gen_range(0..n), rng.gen_range(0..n)));
        }
        for (i, j) in cells {
            let mut m = r.clone();
            let old = m[i][j];
            let mut v = rng.gen_range(0..n - 1);
            if v >= old {
                v += 1;
            }
            m[i][j] = v;
            let t = Instant::now();
            let rep = verify_axioms(&m).map_err(|e| e.to_string())?;
            slowest = slowest.max(t.elapsed());
            ensure(!rep.passed && !rep.violations.is_empty(), || {
                format!("{name}: mutation ({i},{j}) -> {v} passed")
            })?;
            mutants += 1;
        }
    }
    ensure(slowest < Duration::from_secs(1), || {
        format!("slowest check {slowest:?}")
    })?;
    Ok(format!("{mutants} mutants rejected, slowest {slowest:?}"))
}

fn criterion_2() -> Outcome {
    let mut pairs = 0;
    for (name, g) in corpus() {
        let r = rows(&g);
        let n = r.len();
        let l: Vec<Vec<usize>> = r.clone();
        for a in 0..n {
            for b in 0..n {
                let gab = gyr_perm(&r, a, b);
                ensure(g.gyr(a, b).to_vec() == gab, || {
                    format!("{name}: gyr[{a},{b}] differs")
                })?;
                ensure(gyr_perm(&r, r[a][b], b) == gab, || {
                    format!("{name}: left loop at {a},{b}")
                })?;
                ensure(gyr_perm(&r, b, a) == invert(&gab), || {
                    format!("{name}: inverse at {a},{b}")
                })?;
                let via_l = compose(&invert(&l[r[a][b]]), &compose(&l[a], &l[b]));
                ensure(via_l == gab, || {
                    format!("{name}: translation form at {a},{b}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

/// Automorphisms by trying every relabeling.
fn brute_automorphisms(r: &Rows) -> Vec<Vec<usize>> {
    relabelings(r.len())
        .into_iter()
        .filter(|p| relabel(r, p) == *r)
        .collect()
}

fn criterion_3() -> Outcome {
    for (name, g) in corpus() {
        let r = rows(&g);
        let n = r.len();
        let comm = |a: usize, b: usize| commutator(&g, a, b);
        let derived = commutator_subgyrogroup(&g);
        let all_comms: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| comm(a, b))
            .collect();
        ensure(derived.members() == close(&r, &all_comms), || {
            format!("{name}: G' differs from closure")
        })?;
        for a in 0..n {
            for b in 0..n {
                let item1 = (comm(a, b) == 0) == (r[a][b] == gyr(&r, a, b, r[b][a]));
                ensure(item1, || format!("{name}: item 1 at {a},{b}"))?;
                let (na, nb) = (left_inv(&r, a), left_inv(&r, b));
                let item2 = left_inv(&r, r[a][b]) == r[r[na][nb]][comm(na, nb)];
                ensure(item2, || format!("{name}: item 2 at {a},{b}"))?;
            }
        }
        // Item 3 over projections onto every oracle quotient.
        for nset in brute_normals(&r) {
            let q = congruence_quotient(&r, &nset);
            let qt = GyroTable::from_rows(&q).map_err(|e| e.to_string())?;
            let proj: Vec<usize> = (0..n)
                .map(|a| congruence_quotient_class(&r, &nset, a))
                .collect();
            let phi = Hom::new(proj.clone(), &g, &qt).map_err(|e| e.to_string())?;
            for a in 0..n {
                for b in 0..n {
                    ensure(
                        phi.apply(comm(a, b)) == commutator(&qt, proj[a], proj[b]),
                        || format!("{name}: item 3 at {a},{b} for N={nset:?}"),
                    )?;
                }
            }
        }
        // Items 3 and 4 over every automorphism.
        let auts = brute_automorphisms(&r);
        let module_auts: Vec<Vec<usize>> = automorphisms(&g, 1_000_000)
            .map_err(|e| e.to_string())?
            .iter()
            .map(Perm::to_vec)
            .collect();
        let mut sorted = auts.clone();
        sorted.sort();
        ensure(sorted == module_auts, || {
            format!("{name}: automorphism lists differ")
        })?;
        for t in &auts {
            for a in 0..n {
                for b in 0..n {
                    ensure(t[comm(a, b)] == comm(t[a], t[b]), || {
                        format!("{name}: item 3 for an automorphism")
                    })?;
                }
            }
            let mut img: Vec<usize> = derived.members().iter().map(|&x| t[x]).collect();
            img.sort_unstable();
            ensure(img == derived.members(), || {
                format!("{name}: item 4 for {t:?}")
            })?;
        }
        for a in 0..n {
            for b in 0..n {
                let mut img: Vec<usize> = derived
                    .members()
                    .iter()
                    .map(|&x| gyr(&r, a, b, x))
                    .collect();
                img.sort_unstable();
                ensure(img == derived.members(), || {
                    format!("{name}: gyr[{a},{b}] moves G'")
                })?;
            }
        }
        // Item 5.
        ensure((derived.len() == 1) == is_gyrocommutative(&r), || {
            format!("{name}: item 5")
        })?;
        // Item 6 over the oracle normal lattice.
        for nset in brute_normals(&r) {
            let gc = is_gyrocommutative(&congruence_quotient(&r, &nset));
            let contains = derived.members().iter().all(|x| nset.contains(x));
            let comms_in = all_comms.iter().all(|x| nset.contains(x));
            ensure(gc == contains && contains == comms_in, || {
                format!("{name}: item 6 at N={nset:?}")
            })?;
        }
        if is_associative(&r) {
            ensure(derived.members() == classical_derived(&r), || {
                format!("{name}: classical derived subgroup differs")
            })?;
        }
    }
    let s3 = corpus().into_iter().find(|(n, _)| n == "s3").unwrap().1;
    ensure(commutator_subgyrogroup(&s3).members() == [0, 3, 4], || {
        "S3' is not A3".into()
    })?;
    Ok("items 1-6 exhaustive; S3' = A3".into())
}

#[allow(clippy::needless_range_loop)]
fn congruence_quotient_class(r: &Rows, nset: &[usize], a: usize) -> usize {
    // Class index of `a`, matching the numbering of `congruence_quotient`.
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..r.len() {
        if !reps.iter().any(|&y| nset.contains(&r[left_inv(r, y)][x])) {
            reps.push(x);
        }
    }
    reps.iter()
        .position(|&y| nset.contains(&r[left_inv(r, y)][a]))
        .unwrap()
}

fn criterion_4() -> Outcome {
    let caps = Caps::default();
    for (name, g) in corpus() {
        let r = rows(&g);
        let normals = brute_normals(&r);
        let module: Vec<Vec<usize>> = normal_subgyrogroups(&g, &caps)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|s| s.members().to_vec())
            .collect();
        ensure(module == normals, || {
            format!("{name}: normal lattice differs from congruence oracle")
        })?;
        let derived = commutator_subgyrogroup(&g);
        let nc = nc_commutator(&g, &caps).map_err(|e| e.to_string())?;
        let expected = normals
            .iter()
            .filter(|s| derived.members().iter().all(|x| s.contains(x)))
            .fold((0..r.len()).collect::<Vec<_>>(), |acc, s| {
                acc.into_iter().filter(|x| s.contains(x)).collect()
            });
        ensure(nc.members() == expected, || {
            format!("{name}: NC(G') differs")
        })?;
        ensure(is_normal_by_congruence(&r, nc.members()), || {
            format!("{name}: NC(G') not normal")
        })?;
        ensure(
            is_gyrocommutative(&congruence_quotient(&r, nc.members())),
            || format!("{name}: G/NC(G') not gyrocommutative"),
        )?;
        ensure(subgroup_by_definition(&r, nc.members()), || {
            format!("{name}: NC(G') not a subgroup")
        })?;
        ensure(subgroup_by_definition(&r, derived.members()), || {
            format!("{name}: G' not a subgroup")
        })?;
        ensure(
            is_subgroup(&g, &nc).unwrap() && is_subgroup(&g, &derived).unwrap(),
            || format!("{name}: is_subgroup disagrees"),
        )?;
        for nset in &normals {
            let gc = is_gyrocommutative(&congruence_quotient(&r, nset));
            let above = nc.members().iter().all(|x| nset.contains(x));
            ensure(gc == above, || {
                format!("{name}: minimality fails at {nset:?}")
            })?;
        }
    }
    Ok("normal, gyrocommutative quotient, subgroups, minimality".into())
}

fn criterion_5() -> Outcome {
    for (name, g) in corpus() {
        let r = rows(&g);
        let n = r.len();
        let nl = left_nucleus(&g).map_err(|e| e.to_string())?;
        let nm = middle_nucleus(&g).map_err(|e| e.to_string())?;
        let nr = right_nucleus(&g).map_err(|e| e.to_string())?;
        ensure(nl.members() == nucleus_left(&r), || {
            format!("{name}: N_l differs")
        })?;
        ensure(nm.members() == nucleus_middle(&r), || {
            format!("{name}: N_m differs")
        })?;
        ensure(nr.members() == nucleus_right(&r), || {
            format!("{name}: N_r differs")
        })?;
        ensure(nl == nm, || format!("{name}: N_l != N_m"))?;
        // Gyration forms.
        let id: Vec<usize> = (0..n).collect();
        let gl: Vec<usize> = (0..n)
            .filter(|&a| (0..n).all(|x| gyr_perm(&r, a, x) == id))
            .collect();
        let gm: Vec<usize> = (0..n)
            .filter(|&a| (0..n).all(|x| gyr_perm(&r, x, a) == id))
            .collect();
        let gr: Vec<usize> = (0..n)
            .filter(|&a| (0..n).all(|x| (0..n).all(|y| gyr(&r, x, y, a) == a)))
            .collect();
        ensure(
            gl == nucleus_left(&r) && gm == nucleus_middle(&r) && gr == nucleus_right(&r),
            || format!("{name}: dual characterizations disagree"),
        )?;
        for s in [&nl, &nm, &nr] {
            ensure(
                l_invariant(&r, s.members()) && is_l_subgyrogroup(&g, s).unwrap(),
                || format!("{name}: {:?} not an L-subgyrogroup", s.members()),
            )?;
            ensure(
                subgroup_by_definition(&r, s.members()) && is_subgroup(&g, s).unwrap(),
                || format!("{name}: {:?} not a subgroup", s.members()),
            )?;
        }
        ensure(is_normal_by_congruence(&r, nl.members()), || {
            format!("{name}: N_l not normal")
        })?;
        if !is_associative(&r) {
            ensure(nl.len() < n, || format!("{name}: N_l = G for a non-group"))?;
        }
    }
    Ok("nuclei match definitions; dual forms agree".into())
}

/// Translation words up to `max_len` whose reversed product is the identity.
fn words_oracle(r: &Rows, max_len: usize) -> BTreeSet<Vec<usize>> {
    let n = r.len();
    let id: Vec<usize> = (0..n).collect();
    let mut out = BTreeSet::new();
    let mut layer: HashSet<(Vec<usize>, Vec<usize>)> = HashSet::from([(id.clone(), id.clone())]);
    for _ in 0..max_len {
        let mut next = HashSet::new();
        for (f, rev) in &layer {
            for row in r {
                let pair = (compose(f, row), compose(row, rev));
                if pair.1 == id {
                    out.insert(pair.0.clone());
                }
                next.insert(pair);
            }
        }
        layer = next;
    }
    out
}

fn lmlt_oracle(r: &Rows) -> HashSet<Vec<usize>> {
    let id: Vec<usize> = (0..r.len()).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for row in r {
            let q = compose(&p, row);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

fn layer_checks(name: &str, r: &Rows, layer: &PermLayer) -> Result<(), String> {
    let n = r.len();
    let id: Vec<usize> = (0..n).collect();
    let lg: HashSet<Vec<usize>> = r.iter().cloned().collect();
    ensure(layer.lmlt.order() == lmlt_oracle(r).len(), || {
        format!("{name}: |lmlt| differs")
    })?;
    // Twisted subgroup.
    ensure(lg.contains(&id), || format!("{name}: id not in L(G)"))?;
    for x in r {
        ensure(lg.contains(&invert(x)), || {
            format!("{name}: L(G) not closed under inverse")
        })?;
        for y in r {
            ensure(lg.contains(&compose(x, &compose(y, x))), || {
                format!("{name}: xyx outside L(G)")
            })?;
        }
    }
    let fixing: Vec<&Vec<usize>> = r.iter().filter(|p| p[0] == 0).collect();
    ensure(fixing == [&id], || {
        format!("{name}: L(G) meets Sym0 beyond id")
    })?;
    let sharp: Vec<Vec<usize>> = layer.lg_sharp.iter().map(Perm::to_vec).collect();
    let mut expected: Vec<Vec<usize>> = nucleus_left(r).iter().map(|&x| r[x].clone()).collect();
    expected.sort();
    ensure(sharp == expected, || format!("{name}: L(G)^# != L(N_l)"))?;
    let prime: Vec<Vec<usize>> = layer.lg_prime.iter().map(Perm::to_vec).collect();
    ensure(prime.iter().all(|p| sharp.contains(p)), || {
        format!("{name}: L(G)' not inside L(G)^#")
    })?;
    for s in [&sharp, &prime] {
        for l in r {
            let li = invert(l);
            ensure(
                s.iter().all(|p| s.contains(&compose(l, &compose(p, &li)))),
                || format!("{name}: not normal under generator conjugation"),
            )?;
        }
    }
    let words: Vec<Vec<usize>> = words_oracle(r, 6).into_iter().collect();
    ensure(words == prime, || {
        format!(
            "{name}: word oracle {} vs closure {}",
            words.len(),
            prime.len()
        )
    })
}

fn criterion_6() -> Outcome {
    let mut slowest = Duration::ZERO;
    for (name, g) in corpus() {
        let t = Instant::now();
        let layer = perm_layer(&g, &Caps::default()).map_err(|e| e.to_string())?;
        slowest = slowest.max(t.elapsed());
        layer_checks(&name, &rows(&g), &layer)?;
    }
    ensure(slowest < Duration::from_secs(60), || {
        format!("slowest layer {slowest:?}")
    })?;
    Ok(format!("slowest layer {slowest:?}"))
}

fn criterion_7() -> Outcome {
    for (name, g) in corpus() {
        let r = rows(&g);
        let rad = perm_layer(&g, &Caps::default())
            .map_err(|e| e.to_string())?
            .radical;
        let words = words_oracle(&r, 6);
        let expected: Vec<usize> = (0..r.len()).filter(|&a| words.contains(&r[a])).collect();
        ensure(rad.members() == expected, || {
            format!("{name}: Rad differs from word oracle")
        })?;
        ensure(
            rad.members().iter().all(|x| nucleus_left(&r).contains(x)),
            || format!("{name}: Rad not in N_l"),
        )?;
        ensure(subgroup_by_definition(&r, rad.members()), || {
            format!("{name}: Rad not a subgroup")
        })?;
        ensure(is_normal_by_congruence(&r, rad.members()), || {
            format!("{name}: Rad not normal")
        })?;
        if is_associative(&r) && is_abelian(&r) {
            ensure(rad.members() == [0], || {
                format!("{name}: Rad of abelian group is {:?}", rad.members())
            })?;
        }
    }
    Ok("inside N_l, normal subgroup, {0} for abelian groups".into())
}

fn least_prime(n: u64) -> u64 {
    (2..=n).find(|d| n.is_multiple_of(*d)).unwrap_or(n)
}

fn criterion_8() -> Outcome {
    let mut pairs = 0;
    let mut index_two = 0;
    for (name, g) in corpus() {
        let r = rows(&g);
        let n = r.len();
        let normals = brute_normals(&r);
        for h in brute_subgyrogroups(&r) {
            let cosets: BTreeSet<Vec<usize>> = (0..n)
                .map(|a| {
                    let mut c: Vec<usize> = h.iter().map(|&x| r[a][x]).collect();
                    c.sort_unstable();
                    c
                })
                .collect();
            let partition = cosets.iter().map(Vec::len).sum::<usize>() == n;
            let p = cosets.len() as u64;
            if !partition || !(2..p).all(|d| !p.is_multiple_of(d)) || p < 2 {
                continue;
            }
            pairs += 1;
            let hs = set(&g, &h);
            let outside: Vec<usize> = (0..n).filter(|a| !h.contains(a)).collect();
            let c1 = outside
                .iter()
                .all(|&a| h.contains(&multiple(&r, p as i64, a)));
            let c2 = outside.iter().all(|&a| {
                (1..=n as u64).any(|k| {
                    (k == 1 || least_prime(k) >= p) && h.contains(&multiple(&r, k as i64, a))
                })
            });
            let c3 = outside
                .iter()
                .all(|&a| (1..p).all(|k| !h.contains(&multiple(&r, k as i64, a))));
            ensure(c1 == c2 && c2 == c3, || {
                format!("{name}: conditions disagree for {h:?}")
            })?;
            let rep = equivalence_report(&g, &hs).map_err(|e| e.to_string())?;
            ensure(rep.condition_p == c1, || {
                format!("{name}: module conditions differ for {h:?}")
            })?;
            let normal = normals.contains(&h);
            if least_prime(n as u64) == p {
                ensure(c2, || {
                    format!("{name}: smallest prime without condition 2 for {h:?}")
                })?;
                let crit = outside.iter().any(|&y| {
                    (0..p).all(|i| {
                        let base = multiple(&r, i as i64, y);
                        let coset: Vec<usize> = h.iter().map(|&x| r[base][x]).collect();
                        (0..n).all(|a| {
                            (0..n).all(|b| coset.iter().all(|&x| coset.contains(&gyr(&r, a, b, x))))
                        })
                    })
                });
                ensure(crit == normal, || {
                    format!("{name}: gyration criterion {crit} vs normal {normal} for {h:?}")
                })?;
                let module =
                    normality_by_gyration_invariance(&g, &hs).map_err(|e| e.to_string())?;
                ensure(module.holds == normal, || {
                    format!("{name}: module criterion differs for {h:?}")
                })?;
            }
            if p == 2 {
                let invariant = (0..n)
                    .all(|a| (0..n).all(|b| h.iter().all(|&x| h.contains(&gyr(&r, a, b, x)))));
                ensure(
                    index_two_normality(&g, &hs).map_err(|e| e.to_string())? == invariant,
                    || format!("{name}: index-2 hypothesis differs for {h:?}"),
                )?;
                if invariant {
                    index_two += 1;
                    ensure(normal && is_normal(&g, &hs).unwrap(), || {
                        format!("{name}: index-2 {h:?} not normal")
                    })?;
                }
            }
        }
    }
    Ok(format!(
        "{pairs} prime-index pairs, {index_two} gyr-invariant index-2 pairs"
    ))
}

fn criterion_9() -> Outcome {
    let expected = [1, 1, 1, 2, 1, 2];
    for (i, &count) in expected.iter().enumerate() {
        let n = i + 1;
        let out = enumerate(&SearchConfig::exhaustive(n), 10).map_err(|e| e.to_string())?;
        ensure(out.complete && out.tables.len() == count, || {
            format!(
                "n={n}: {} classes, complete={}",
                out.tables.len(),
                out.complete
            )
        })?;
        let reps: Vec<Rows> = out.tables.iter().map(rows).collect();
        ensure(
            reps.iter().all(|t| is_associative(t) && is_gyrogroup(t)),
            || format!("n={n}: non-group emitted"),
        )?;
        ensure(brute_classes(&reps) == count, || {
            format!("n={n}: canonical classes not distinct")
        })?;
        let mut leaves = Vec::new();
        enumerate_with(&SearchConfig::exhaustive(n), |t| {
            leaves.push(rows(&t));
            true
        })
        .map_err(|e| e.to_string())?;
        ensure(brute_classes(&leaves) == count, || {
            format!("n={n}: raw leaves span other classes")
        })?;
    }
    let t = Instant::now();
    let out = enumerate(&SearchConfig::first_nonassociative(8), 10).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let found = out
        .tables
        .iter()
        .map(rows)
        .find(|t| !is_associative(t))
        .ok_or("no nonassociative table at order 8")?;
    ensure(is_gyrogroup(&found), || {
        "order-8 table fails the axioms".into()
    })?;
    ensure(elapsed < Duration::from_secs(3600), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "counts 1,1,1,2,1,2; order-8 nonassociative found in {elapsed:?}"
    ))
}

fn criterion_10() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_gyrokit"))
            .arg("sweep-theorems")
            .arg(corpus_dir())
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || {
        format!(
            "sweep exited {:?}: {}",
            a.status.code(),
            String::from_utf8_lossy(&a.stdout)
        )
    })?;
    ensure(a.stdout == b.stdout, || "reports differ".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("axioms and mutation detection", criterion_1),
        ("gyration identities", criterion_2),
        ("commutator theorem sweep", criterion_3),
        ("normal closure of G'", criterion_4),
        ("nuclei", criterion_5),
        ("twisted and permutation layer", criterion_6),
        ("radical", criterion_7),
        ("prime-index sweep", criterion_8),
        ("search", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
