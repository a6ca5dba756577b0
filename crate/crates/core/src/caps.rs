/// Enumeration limits.
///
/// Every potentially explosive enumeration in the library is guarded by one
/// of these caps and fails with an explicit [`crate::Error::Resource`] rather
/// than truncating silently. The defaults are comfortable for the exhaustive
/// small-degree verification sweeps; raise them deliberately if you need
/// more.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Maximum number of elements enumerated for a generated p-subgroup.
    pub group_elements: usize,
    /// Maximum number of tabloids materialized (`dim M^lambda` guard).
    pub tabloids: usize,
    /// Maximum symmetric-group degree for full S_n scans in the oracle.
    pub oracle_degree: usize,
    /// Maximum degree accepted by the group-conjugacy backtracker.
    pub conjugacy_degree: usize,
    /// Maximum number of row/column-sum matrices enumerated.
    pub matrices: usize,
    /// Search-node budget for the Young-summand membership test.
    pub donkin_nodes: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group_elements: 1_000_000,
            tabloids: 1_000_000,
            oracle_degree: 8,
            conjugacy_degree: 12,
            matrices: 1_000_000,
            donkin_nodes: 10_000_000,
        }
    }
}
