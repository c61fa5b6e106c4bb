/// Resource limits shared by the analyses. Every algorithm in this crate is
/// at least cubic in the order, so all of them are bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest order a direct product may have.
    pub order: usize,
    /// Largest order for subgyrogroup lattice enumeration (and everything built on it).
    pub lattice: usize,
    /// Largest permutation group materialized by closure.
    pub perm_group: usize,
    /// Largest pair set in the doubled-group closure.
    pub pair_closure: usize,
    /// Largest order for brute-force canonical forms.
    pub canonical: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order: 4096,
            lattice: 64,
            perm_group: 1_000_000,
            pair_closure: 1_000_000,
            canonical: 10,
        }
    }
}
