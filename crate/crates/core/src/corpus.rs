//! The built-in regression corpus: every group here has order at most 200,
//! so all methods including the generic oracle run on each of them.

use crate::group::GroupSpec;

pub const CORPUS: &[&str] = &[
    // cyclic
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z12", "Z15", "Z16", "Z27", "Z30", "Z32", "Z36", "Z60",
    // elementary abelian
    "E2^2", "E2^3", "E2^4", "E3^2", "E5^2",
    // dihedral
    "D6", "D8", "D10", "D12", "D16", "D18", "D20", "D24", "D30", "D36",
    // generalized quaternion
    "Q8", "Q12", "Q16", "Q20", "Q24", "Q32",
    // abelian
    "Z2xZ4", "Z2xZ8", "Z4xZ4", "Z3xZ9", "Ab[2,6]", "Ab[2,12]", "Ab[2,2,6]", "Ab[3,6]",
    // symmetric and alternating
    "S3", "S4", "S5", "A4", "A5",
    // mixed products
    "Z3xQ8", "Z2xS3", "Z3xS3", "Z2xA4", "Z2xD8", "Z4xS3",
];

pub fn corpus() -> Vec<GroupSpec> {
    CORPUS
        .iter()
        .map(|s| s.parse().expect("corpus entries parse"))
        .collect()
}
