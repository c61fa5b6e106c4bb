//! Cayley-table gyrogroups: axiom verification, gyrations, coaddition,
//! integral multiples and direct products.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{GyroError, Result};
use crate::perm::Perm;

/// Elements are plain indices into the carrier `0..n`; `0` is the identity.
pub type Elem = usize;

/// Upper bound on recorded violations per report.
const MAX_VIOLATIONS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `0 ⊕ a = a`.
    G1,
    /// Left inverses exist (and are unique).
    G2,
    /// Left gyroassociativity with `gyr[a,b]` an automorphism.
    G3,
    /// Left loop property `gyr[a⊕b, b] = gyr[a, b]`.
    G4,
    /// Every row of the table is a permutation.
    RowBij,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::G1 => "G1",
            Axiom::G2 => "G2",
            Axiom::G3 => "G3",
            Axiom::G4 => "G4",
            Axiom::RowBij => "ROW-BIJ",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// Elements that reproduce the failure; meaning depends on `detail`.
    pub witness: Vec<Elem>,
    pub detail: &'static str,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} witness={:?}",
            self.axiom, self.detail, self.witness
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    /// Elements `a` with `a ⊕ 0 != a` in a table that otherwise passes.
    /// Gyrogroups always have a two-sided identity, so a nonempty list here
    /// would be a finding, not an error.
    pub right_identity_failures: Vec<Elem>,
}

impl AxiomReport {
    fn push(&mut self, axiom: Axiom, detail: &'static str, witness: Vec<Elem>) {
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(Violation {
                axiom,
                witness,
                detail,
            });
        }
    }
}

/// Check a candidate table against the gyrogroup axioms with `0` as the
/// designated identity.
///
/// Shape problems (empty, ragged, out-of-range entries) are input errors,
/// not axiom violations. Row bijectivity and G1/G2 are checked first; if any
/// of them fails the gyration-based checks are skipped since `gyr[a,b]` is
/// not defined.
pub fn verify_axioms(rows: &[Vec<Elem>]) -> Result<AxiomReport> {
    let n = rows.len();
    if n == 0 {
        return Err(GyroError::Malformed("empty table".into()));
    }
    let mut cells = Vec::with_capacity(n * n);
    for (a, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(GyroError::Malformed(format!(
                "row {a} has {} entries, expected {n}",
                row.len()
            )));
        }
        for &x in row {
            if x >= n {
                return Err(GyroError::Malformed(format!(
                    "entry {x} in row {a} out of range 0..{n}"
                )));
            }
            cells.push(x as u32);
        }
    }
    Ok(verify_cells(n, &cells).0)
}

/// Axiom check on a flat, in-range table. Returns the report and, when the
/// inverse map is well defined, the inverse map.
#[allow(clippy::needless_range_loop)]
pub(crate) fn verify_cells(n: usize, t: &[u32]) -> (AxiomReport, Option<Vec<u32>>) {
    let at = |a: usize, b: usize| t[a * n + b] as usize;
    let mut rep = AxiomReport::default();

    for a in 0..n {
        if at(0, a) != a {
            rep.push(Axiom::G1, "0+a != a", vec![a]);
        }
    }
    for a in 0..n {
        let mut first = vec![usize::MAX; n];
        for b in 0..n {
            let c = at(a, b);
            if first[c] != usize::MAX {
                rep.push(Axiom::RowBij, "a+b1 == a+b2", vec![a, first[c], b]);
                break;
            }
            first[c] = b;
        }
    }
    let mut inv = vec![u32::MAX; n];
    for a in 0..n {
        let mut found: Vec<usize> = (0..n).filter(|&b| at(b, a) == 0).collect();
        match found.len() {
            0 => rep.push(Axiom::G2, "no b with b+a = 0", vec![a]),
            1 => inv[a] = found.pop().unwrap() as u32,
            _ => rep.push(
                Axiom::G2,
                "left inverse not unique",
                vec![a, found[0], found[1]],
            ),
        }
    }
    if !rep.violations.is_empty() {
        rep.passed = false;
        return (rep, None);
    }

    let gyr_into = |a: usize, b: usize, out: &mut [u32]| {
        let w = inv[at(a, b)] as usize;
        for (c, slot) in out.iter_mut().enumerate() {
            *slot = at(w, at(a, at(b, c))) as u32;
        }
    };
    let mut g = vec![0u32; n];
    let mut g4 = vec![0u32; n];
    let mut seen = vec![false; n];
    'pairs: for a in 0..n {
        for b in 0..n {
            gyr_into(a, b, &mut g);
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..n {
                let x = g[c] as usize;
                if std::mem::replace(&mut seen[x], true) {
                    rep.push(Axiom::G3, "gyr[a,b] not injective", vec![a, b, c]);
                    continue 'pairs;
                }
            }
            let ab = at(a, b);
            for c in 0..n {
                if at(a, at(b, c)) != at(ab, g[c] as usize) {
                    rep.push(Axiom::G3, "a+(b+c) != (a+b)+gyr[a,b]c", vec![a, b, c]);
                    break;
                }
            }
            'auto: for x in 0..n {
                for y in 0..n {
                    let lhs = g[at(x, y)] as usize;
                    let rhs = at(g[x] as usize, g[y] as usize);
                    if lhs != rhs {
                        rep.push(
                            Axiom::G3,
                            "gyr[a,b](x+y) != gyr[a,b]x + gyr[a,b]y",
                            vec![a, b, x, y],
                        );
                        break 'auto;
                    }
                }
            }
            gyr_into(ab, b, &mut g4);
            if let Some(c) = (0..n).find(|&c| g4[c] != g[c]) {
                rep.push(Axiom::G4, "gyr[a+b,b]c != gyr[a,b]c", vec![a, b, c]);
            }
        }
    }
    rep.passed = rep.violations.is_empty();
    if rep.passed {
        rep.right_identity_failures = (0..n).filter(|&a| at(a, 0) != a).collect();
    }
    (rep, Some(inv))
}

/// A finite gyrogroup given by its Cayley table.
///
/// Construction always validates the axioms, so every `GyroTable` is a
/// gyrogroup with identity `0`. Gyrations are derived from the table with the
/// gyrator identity `gyr[a,b]c = ⊖(a⊕b) ⊕ (a⊕(b⊕c))` and cached on demand.
pub struct GyroTable {
    n: usize,
    cells: Vec<u32>,
    inv: Vec<u32>,
    gyr_cache: OnceLock<Box<[OnceLock<Perm>]>>,
}

impl Clone for GyroTable {
    fn clone(&self) -> Self {
        GyroTable {
            n: self.n,
            cells: self.cells.clone(),
            inv: self.inv.clone(),
            gyr_cache: OnceLock::new(),
        }
    }
}

impl PartialEq for GyroTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.cells == other.cells
    }
}

impl Eq for GyroTable {}

impl PartialOrd for GyroTable {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GyroTable {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.cells).cmp(&(other.n, &other.cells))
    }
}

impl std::hash::Hash for GyroTable {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.cells.hash(state);
    }
}

impl fmt::Debug for GyroTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GyroTable")
            .field("order", &self.n)
            .field("rows", &self.rows())
            .finish()
    }
}

impl GyroTable {
    /// Validate and wrap a table. Fails with [`GyroError::Axioms`] carrying
    /// the full report if the axioms do not hold.
    pub fn from_rows(rows: &[Vec<Elem>]) -> Result<Self> {
        let report = verify_axioms(rows)?;
        if !report.passed {
            return Err(GyroError::Axioms(Box::new(report)));
        }
        let cells = rows.iter().flatten().map(|&x| x as u32).collect();
        Ok(Self::trusted(rows.len(), cells))
    }

    /// Build from an operation closure; the result is validated.
    pub fn from_fn(n: usize, op: impl Fn(Elem, Elem) -> Elem) -> Result<Self> {
        let rows: Vec<Vec<Elem>> = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub(crate) fn from_cells(n: usize, cells: Vec<u32>) -> Result<Self> {
        if cells.len() != n * n || cells.iter().any(|&x| x as usize >= n) || n == 0 {
            return Err(GyroError::Malformed("bad flat table".into()));
        }
        let (report, _) = verify_cells(n, &cells);
        if !report.passed {
            return Err(GyroError::Axioms(Box::new(report)));
        }
        Ok(Self::trusted(n, cells))
    }

    /// Caller guarantees the cells already passed [`verify_cells`].
    fn trusted(n: usize, cells: Vec<u32>) -> Self {
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if cells[b * n + a] == 0 {
                    inv[a] = b as u32;
                }
            }
        }
        GyroTable {
            n,
            cells,
            inv,
            gyr_cache: OnceLock::new(),
        }
    }

    /// The one-element gyrogroup.
    pub fn trivial() -> Self {
        Self::trusted(1, vec![0])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.cells
            .chunks(self.n)
            .map(|r| r.iter().map(|&x| x as Elem).collect())
            .collect()
    }

    pub(crate) fn cells(&self) -> &[u32] {
        &self.cells
    }

    fn check(&self, a: Elem) -> Result<()> {
        if a < self.n {
            Ok(())
        } else {
            Err(GyroError::OutOfRange {
                elem: a,
                order: self.n,
            })
        }
    }

    /// `a ⊕ b`. Panics if an argument is out of range.
    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.cells[a * self.n + b] as Elem
    }

    pub fn checked_add(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    /// `⊖a`, the unique left inverse; it is also a right inverse.
    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.inv[a] as Elem
    }

    pub fn checked_neg(&self, a: Elem) -> Result<Elem> {
        self.check(a)?;
        Ok(self.neg(a))
    }

    /// `a ⊖ b = a ⊕ (⊖b)`.
    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `gyr[a,b]c` evaluated directly from the gyrator identity.
    #[inline]
    pub fn gyr_apply(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        let w = self.neg(self.add(a, b));
        self.add(w, self.add(a, self.add(b, c)))
    }

    /// The gyroautomorphism `gyr[a,b]` as a permutation, cached per pair.
    pub fn gyr(&self, a: Elem, b: Elem) -> &Perm {
        let n = self.n;
        let cache = self
            .gyr_cache
            .get_or_init(|| (0..n * n).map(|_| OnceLock::new()).collect());
        cache[a * n + b]
            .get_or_init(|| Perm::from_images_unchecked((0..n).map(|c| self.gyr_apply(a, b, c))))
    }

    pub fn checked_gyr(&self, a: Elem, b: Elem) -> Result<&Perm> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.gyr(a, b))
    }

    /// Left gyrotranslation `L_a : x ↦ a ⊕ x`.
    pub fn left_translation(&self, a: Elem) -> Perm {
        Perm::from_images_unchecked(
            self.cells[a * self.n..(a + 1) * self.n]
                .iter()
                .map(|&x| x as Elem),
        )
    }

    /// Coaddition `a ⊞ b = a ⊕ gyr[a, ⊖b]b`.
    pub fn coadd(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.gyr_apply(a, self.neg(b), b))
    }

    /// Integral multiple: `0a = 0`, `ma = a ⊕ (m-1)a` for `m ≥ 1`,
    /// `ma = (-m)(⊖a)` for `m < 0`.
    ///
    /// For `m ≥ 0` this is `L_a^m(0)`, so `m` is reduced modulo the length
    /// of the cycle of `0` under `L_a`.
    pub fn int_multiple(&self, m: i64, a: Elem) -> Elem {
        if m < 0 {
            return self.int_multiple(m.unsigned_abs() as i64, self.neg(a));
        }
        let mut period = 1u64;
        let mut x = a;
        while x != 0 {
            x = self.add(a, x);
            period += 1;
        }
        let steps = (m as u64) % period;
        let mut x = 0;
        for _ in 0..steps {
            x = self.add(a, x);
        }
        x
    }

    /// `a ⊕ b = gyr[a,b](b ⊕ a)` for all `a, b`.
    pub fn is_gyrocommutative(&self) -> bool {
        self.elements().all(|a| {
            self.elements()
                .all(|b| self.add(a, b) == self.gyr_apply(a, b, self.add(b, a)))
        })
    }

    pub fn gyrations_trivial(&self) -> bool {
        self.elements().all(|a| {
            self.elements()
                .all(|b| self.elements().all(|c| self.gyr_apply(a, b, c) == c))
        })
    }

    pub fn is_associative(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| {
                self.elements()
                    .all(|c| self.add(a, self.add(b, c)) == self.add(self.add(a, b), c))
            })
        })
    }

    /// Whether the gyrogroup is a group. Both characterizations (trivial
    /// gyrations, associativity) are evaluated and must agree.
    pub fn is_group(&self) -> bool {
        let by_gyr = self.gyrations_trivial();
        let by_assoc = self.is_associative();
        assert_eq!(
            by_gyr, by_assoc,
            "trivial-gyration and associativity characterizations of groups disagree"
        );
        by_gyr
    }

    /// Whether `⊕` is commutative.
    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.add(a, b) == self.add(b, a)))
    }

    /// Apply a relabeling: the result has `σ(a) ⊕' σ(b) = σ(a ⊕ b)`.
    /// `sigma` must fix 0.
    pub fn relabel(&self, sigma: &Perm) -> Result<GyroTable> {
        if sigma.degree() != self.n || sigma.apply(0) != 0 {
            return Err(GyroError::Precondition(
                "relabeling must be a permutation of the carrier fixing 0".into(),
            ));
        }
        let inv = sigma.inverse();
        let n = self.n;
        let cells = (0..n * n)
            .map(|k| sigma.apply(self.add(inv.apply(k / n), inv.apply(k % n))) as u32)
            .collect();
        Ok(Self::trusted(n, cells))
    }
}

/// Direct product with lexicographic pair indexing `(a, x) ↦ a·|H| + x`.
pub fn direct_product(g: &GyroTable, h: &GyroTable, order_cap: usize) -> Result<GyroTable> {
    let (n, m) = (g.order(), h.order());
    let size = n.saturating_mul(m);
    if size > order_cap {
        return Err(GyroError::CapExceeded {
            what: "product order",
            cap: order_cap,
            reached: size,
        });
    }
    let cells = (0..size * size)
        .map(|k| {
            let (p, q) = (k / size, k % size);
            (g.add(p / m, q / m) * m + h.add(p % m, q % m)) as u32
        })
        .collect();
    GyroTable::from_cells(size, cells)
}

/// Product of a finite family, folded left to right.
pub fn direct_product_all(factors: &[&GyroTable], order_cap: usize) -> Result<GyroTable> {
    let mut acc = GyroTable::trivial();
    for f in factors {
        acc = direct_product(&acc, f, order_cap)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::{cyclic, klein, symmetric3};

    #[test]
    fn z4_passes() {
        let rep = verify_axioms(&cyclic(4).rows()).unwrap();
        assert!(rep.passed);
        assert!(rep.violations.is_empty());
        assert!(rep.right_identity_failures.is_empty());
    }

    #[test]
    fn z4_mutated_cell_fails() {
        let mut rows = cyclic(4).rows();
        rows[1][1] = 1;
        let rep = verify_axioms(&rows).unwrap();
        assert!(!rep.passed);
        assert!(rep.violations.iter().any(|v| v.axiom == Axiom::RowBij));
    }

    #[test]
    fn malformed_is_input_error() {
        assert!(matches!(verify_axioms(&[]), Err(GyroError::Malformed(_))));
        assert!(matches!(
            verify_axioms(&[vec![0, 1], vec![1]]),
            Err(GyroError::Malformed(_))
        ));
        assert!(matches!(
            verify_axioms(&[vec![0, 2], vec![1, 0]]),
            Err(GyroError::Malformed(_))
        ));
    }

    #[test]
    fn identity_not_at_zero_is_g1() {
        // Z2 with the identity stored at index 1.
        let rep = verify_axioms(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(!rep.passed);
        assert!(rep.violations.iter().any(|v| v.axiom == Axiom::G1));
    }

    #[test]
    fn latin_but_not_gyrogroup_reports_g3_or_g4() {
        // A loop of order 5 that is not a gyrogroup (rows bijective, unique
        // left inverses).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let rep = verify_axioms(&rows).unwrap();
        assert!(!rep.passed);
        assert!(rep
            .violations
            .iter()
            .all(|v| matches!(v.axiom, Axiom::G3 | Axiom::G4)));
    }

    #[test]
    fn z4_lookup_and_inverse() {
        let z4 = cyclic(4);
        assert_eq!(z4.add(1, 2), 3);
        assert_eq!(z4.add(0, 3), 3);
        assert_eq!(z4.neg(1), 3);
        assert_eq!(z4.neg(0), 0);
        assert!(z4.checked_add(4, 0).is_err());
        assert!(z4.checked_neg(9).is_err());
    }

    #[test]
    fn z4_multiples_and_coaddition() {
        let z4 = cyclic(4);
        assert_eq!(z4.int_multiple(3, 1), 3);
        assert_eq!(z4.int_multiple(0, 2), 0);
        assert_eq!(z4.int_multiple(-1, 1), 3);
        assert_eq!(z4.int_multiple(1_000_001, 1), 1);
        assert_eq!(z4.coadd(1, 3), 0);
    }

    #[test]
    fn group_gyrations_are_identity() {
        for g in [cyclic(4), symmetric3(), klein()] {
            for a in g.elements() {
                for b in g.elements() {
                    assert!(g.gyr(a, b).is_identity());
                    assert_eq!(g.coadd(a, b), g.add(a, b));
                }
            }
            assert!(g.is_group());
        }
    }

    #[test]
    fn gyrocommutativity_of_small_groups() {
        assert!(cyclic(4).is_gyrocommutative());
        assert!(!symmetric3().is_gyrocommutative());
    }

    #[test]
    fn klein_is_z2_squared() {
        let z2 = cyclic(2);
        let v4 = direct_product(&z2, &z2, 4096).unwrap();
        assert_eq!(v4, klein());
    }

    #[test]
    fn product_with_trivial_is_same_table() {
        let s3 = symmetric3();
        let p = direct_product(&s3, &GyroTable::trivial(), 4096).unwrap();
        assert_eq!(p, s3);
    }

    #[test]
    fn product_cap() {
        let z4 = cyclic(4);
        assert!(matches!(
            direct_product(&z4, &z4, 15),
            Err(GyroError::CapExceeded { .. })
        ));
    }

    #[test]
    fn trivial_gyrogroup_accepted() {
        let t = GyroTable::from_rows(&[vec![0]]).unwrap();
        assert_eq!(t, GyroTable::trivial());
        assert!(t.is_group());
        assert!(t.is_gyrocommutative());
        assert_eq!(t.int_multiple(-7, 0), 0);
    }

    #[test]
    fn gyr_cache_is_shared_across_threads() {
        let g = symmetric3();
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| {
                    for a in g.elements() {
                        for b in g.elements() {
                            assert!(g.gyr(a, b).is_identity());
                        }
                    }
                });
            }
        });
    }
}
