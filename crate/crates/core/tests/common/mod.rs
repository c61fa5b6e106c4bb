//! Independent oracles. Everything here works on raw rows and brute force;
//! nothing calls the analysis modules it is used to check.
#![allow(dead_code, clippy::needless_range_loop)]

use std::path::PathBuf;

use gyrokit::{format, GyroTable};

pub type Rows = Vec<Vec<usize>>;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every `.gyro` file in the checked-in corpus, sorted by name.
pub fn corpus() -> Vec<(String, GyroTable)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "gyro"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            (name, format::read(&p).unwrap())
        })
        .collect()
}

pub fn op(r: &Rows, a: usize, b: usize) -> usize {
    r[a][b]
}

/// The unique `x` with `x ⊕ a = 0`.
pub fn left_inv(r: &Rows, a: usize) -> usize {
    (0..r.len()).find(|&x| r[x][a] == 0).expect("left inverse")
}

/// `x` with `a ⊕ x = c`, by row scan.
pub fn solve_left(r: &Rows, a: usize, c: usize) -> usize {
    r[a].iter()
        .position(|&v| v == c)
        .expect("row is a permutation")
}

/// `gyr[a,b]c` as the unique `x` with `(a⊕b)⊕x = a⊕(b⊕c)`.
pub fn gyr(r: &Rows, a: usize, b: usize, c: usize) -> usize {
    solve_left(r, r[a][b], r[a][r[b][c]])
}

pub fn gyr_perm(r: &Rows, a: usize, b: usize) -> Vec<usize> {
    (0..r.len()).map(|c| gyr(r, a, b, c)).collect()
}

pub fn is_associative(r: &Rows) -> bool {
    let n = r.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| r[r[a][b]][c] == r[a][r[b][c]])))
}

pub fn is_abelian(r: &Rows) -> bool {
    let n = r.len();
    (0..n).all(|a| (0..n).all(|b| r[a][b] == r[b][a]))
}

/// Closure of `seed ∪ {0}` under `⊕` and left inverse.
pub fn close(r: &Rows, seed: &[usize]) -> Vec<usize> {
    let n = r.len();
    let mut inside = vec![false; n];
    inside[0] = true;
    seed.iter().for_each(|&x| inside[x] = true);
    loop {
        let cur: Vec<usize> = (0..n).filter(|&x| inside[x]).collect();
        let mut grew = false;
        for &a in &cur {
            let na = left_inv(r, a);
            if !inside[na] {
                inside[na] = true;
                grew = true;
            }
            for &b in &cur {
                if !inside[r[a][b]] {
                    inside[r[a][b]] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return (0..n).filter(|&x| inside[x]).collect();
        }
    }
}

/// All subgyrogroups, by testing every subset containing 0 for closure.
pub fn brute_subgyrogroups(r: &Rows) -> Vec<Vec<usize>> {
    let n = r.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let s: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        let closed = s.iter().all(|&a| {
            mask >> left_inv(r, a) & 1 == 1 && s.iter().all(|&b| mask >> r[a][b] & 1 == 1)
        });
        if closed {
            out.push(s);
        }
    }
    out.sort_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
    out
}

/// Normality via congruences: `N` is a kernel iff `a ~ b ⇔ ⊖a⊕b ∈ N` is an
/// equivalence compatible with `⊕` and `⊖`.
pub fn is_normal_by_congruence(r: &Rows, s: &[usize]) -> bool {
    let n = r.len();
    let mut inside = vec![false; n];
    s.iter().for_each(|&x| inside[x] = true);
    let rel = |a: usize, b: usize| inside[r[left_inv(r, a)][b]];
    for a in 0..n {
        for b in 0..n {
            if rel(a, b) != rel(b, a) {
                return false;
            }
            if !rel(a, b) {
                continue;
            }
            if !rel(left_inv(r, a), left_inv(r, b)) {
                return false;
            }
            for c in 0..n {
                if rel(b, c) && !rel(a, c) {
                    return false;
                }
                if !rel(r[a][c], r[b][c]) || !rel(r[c][a], r[c][b]) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn brute_normals(r: &Rows) -> Vec<Vec<usize>> {
    brute_subgyrogroups(r)
        .into_iter()
        .filter(|s| is_normal_by_congruence(r, s))
        .collect()
}

/// Quotient table by the congruence of a normal subset, indexed by the
/// classes ordered by least member.
pub fn congruence_quotient(r: &Rows, s: &[usize]) -> Rows {
    let n = r.len();
    let mut class = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in 0..n {
        if class[a] == usize::MAX {
            for b in 0..n {
                if s.contains(&r[left_inv(r, a)][b]) {
                    class[b] = reps.len();
                }
            }
            reps.push(a);
        }
    }
    reps.iter()
        .map(|&a| reps.iter().map(|&b| class[r[a][b]]).collect())
        .collect()
}

pub fn is_gyrocommutative(r: &Rows) -> bool {
    let n = r.len();
    (0..n).all(|a| (0..n).all(|b| r[a][b] == gyr(r, a, b, r[b][a])))
}

/// Nuclei straight from the associativity definitions.
pub fn nucleus_left(r: &Rows) -> Vec<usize> {
    let n = r.len();
    (0..n)
        .filter(|&a| (0..n).all(|x| (0..n).all(|y| r[r[a][x]][y] == r[a][r[x][y]])))
        .collect()
}

pub fn nucleus_middle(r: &Rows) -> Vec<usize> {
    let n = r.len();
    (0..n)
        .filter(|&a| (0..n).all(|x| (0..n).all(|y| r[r[x][a]][y] == r[x][r[a][y]])))
        .collect()
}

pub fn nucleus_right(r: &Rows) -> Vec<usize> {
    let n = r.len();
    (0..n)
        .filter(|&a| (0..n).all(|x| (0..n).all(|y| r[r[x][y]][a] == r[x][r[y][a]])))
        .collect()
}

/// `ma` by repeated addition from 0; negative `m` uses the left inverse.
pub fn multiple(r: &Rows, m: i64, a: usize) -> usize {
    let base = if m < 0 { left_inv(r, a) } else { a };
    let mut x = 0;
    for _ in 0..m.unsigned_abs() {
        x = r[base][x];
    }
    x
}

/// Derived subgroup of a group table: closure of `a⁻¹b⁻¹ab`.
pub fn classical_derived(r: &Rows) -> Vec<usize> {
    let n = r.len();
    let mut seed = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let (ia, ib) = (left_inv(r, a), left_inv(r, b));
            seed.push(r[r[r[ia][ib]][a]][b]);
        }
    }
    close(r, &seed)
}

/// Every relabeling fixing 0, as `sigma[old] = new`.
pub fn relabelings(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 1..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut out = Vec::new();
    rec(&mut vec![0], &mut used, &mut out);
    out
}

pub fn relabel(r: &Rows, sigma: &[usize]) -> Rows {
    let n = r.len();
    let mut inv = vec![0; n];
    sigma
        .iter()
        .enumerate()
        .for_each(|(old, &new)| inv[new] = old);
    (0..n)
        .map(|i| (0..n).map(|j| sigma[r[inv[i]][inv[j]]]).collect())
        .collect()
}

/// Isomorphism by trying every relabeling.
pub fn brute_isomorphic(r: &Rows, s: &Rows) -> bool {
    r.len() == s.len() && relabelings(r.len()).iter().any(|p| relabel(r, p) == *s)
}

/// Number of isomorphism classes among `tables`, by brute force.
pub fn brute_classes(tables: &[Rows]) -> usize {
    let mut reps: Vec<&Rows> = Vec::new();
    for t in tables {
        if !reps.iter().any(|r| brute_isomorphic(r, t)) {
            reps.push(t);
        }
    }
    reps.len()
}

/// Direct check of the gyrogroup axioms with identity 0, using the
/// definitional gyrator.
pub fn is_gyrogroup(r: &Rows) -> bool {
    let n = r.len();
    let perm = |v: &[usize]| {
        let mut seen = vec![false; n];
        v.iter()
            .all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
    };
    if r.iter().any(|row| row.len() != n || !perm(row)) || (0..n).any(|a| r[0][a] != a) {
        return false;
    }
    if (0..n).any(|a| (0..n).all(|x| r[x][a] != 0)) {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            let g = gyr_perm(r, a, b);
            if !perm(&g) {
                return false;
            }
            if (0..n).any(|x| (0..n).any(|y| g[r[x][y]] != r[g[x]][g[y]])) {
                return false;
            }
            if gyr_perm(r, r[a][b], b) != g {
                return false;
            }
        }
    }
    true
}

pub fn rows(g: &GyroTable) -> Rows {
    g.rows()
}
