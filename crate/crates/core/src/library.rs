//! Stock tables: small groups viewed as gyrogroups with trivial gyrations.

use std::collections::BTreeSet;

use crate::perm::Perm;
use crate::table::{direct_product, GyroTable};

/// `Z_n` with `a ⊕ b = (a + b) mod n`.
pub fn cyclic(n: usize) -> GyroTable {
    GyroTable::from_fn(n, |a, b| (a + b) % n).expect("cyclic group table")
}

/// `Z_2 × Z_2`, indexed `2a + b`.
pub fn klein() -> GyroTable {
    elementary_abelian_2(2)
}

/// `(Z_2)^k` with bitwise xor.
pub fn elementary_abelian_2(k: u32) -> GyroTable {
    GyroTable::from_fn(1 << k, |a, b| a ^ b).expect("elementary abelian table")
}

/// Group table of the permutation group generated by `gens`, with elements
/// sorted by image list (the identity comes first) and `a ⊕ b = a ∘ b`.
pub fn permutation_group(gens: &[Perm]) -> GyroTable {
    let degree = gens.first().map_or(1, Perm::degree);
    let mut elems: BTreeSet<Perm> = BTreeSet::from([Perm::identity(degree)]);
    let mut frontier = vec![Perm::identity(degree)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = p.compose(g);
            if elems.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    let elems: Vec<Perm> = elems.into_iter().collect();
    GyroTable::from_fn(elems.len(), |a, b| {
        let prod = elems[a].compose(&elems[b]);
        elems
            .binary_search(&prod)
            .expect("closed under composition")
    })
    .expect("permutation group table")
}

/// `S_3` on points `{0,1,2}`; elements in image-list order
/// `e, (1 2), (0 1), (0 1 2), (0 2 1), (0 2)`, so `A_3 = {0, 3, 4}`.
pub fn symmetric3() -> GyroTable {
    permutation_group(&[
        Perm::from_images(vec![1, 0, 2]).unwrap(),
        Perm::from_images(vec![1, 2, 0]).unwrap(),
    ])
}

/// Dihedral group of order `2k`, acting on the vertices of a `k`-gon.
pub fn dihedral(k: usize) -> GyroTable {
    let rot = Perm::from_images((0..k).map(|i| (i + 1) % k).collect()).unwrap();
    let refl = Perm::from_images((0..k).map(|i| (k - i) % k).collect()).unwrap();
    permutation_group(&[rot, refl])
}

/// Quaternion group, elements `1, i, j, k, -1, -i, -j, -k`.
pub fn quaternion() -> GyroTable {
    // Unit products: UNIT[x][y] = (sign flip, unit) for x, y in {1, i, j, k}.
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    GyroTable::from_fn(8, |a, b| {
        let (s, u) = UNIT[a % 4][b % 4];
        ((a / 4 + b / 4 + s) % 2) * 4 + u
    })
    .expect("quaternion table")
}

/// All groups of order at most 8, one per isomorphism class, with names.
pub fn groups_up_to_8() -> Vec<(&'static str, GyroTable)> {
    let product = |g: &GyroTable, h: &GyroTable| direct_product(g, h, 64).unwrap();
    vec![
        ("z1", GyroTable::trivial()),
        ("z2", cyclic(2)),
        ("z3", cyclic(3)),
        ("z4", cyclic(4)),
        ("v4", klein()),
        ("z5", cyclic(5)),
        ("z6", cyclic(6)),
        ("s3", symmetric3()),
        ("z7", cyclic(7)),
        ("z8", cyclic(8)),
        ("z4xz2", product(&cyclic(4), &cyclic(2))),
        ("z2xz2xz2", elementary_abelian_2(3)),
        ("d4", dihedral(4)),
        ("q8", quaternion()),
    ]
}
