//! The fixed test matrix of commutative algebras A and Lie algebras k.

use crate::catalog::{self, LieEntry};
use crate::comm::CommAlgebra;
use crate::lie::LieAlgebra;

/// Largest dim A · dim k admitted into the pair battery.
pub const MAX_CURRENT_DIM: usize = 24;

pub const COMM_NAMES: &[&str] = &[
    "field",
    "dual_numbers",
    "trunc_poly:3",
    "trunc_poly:4",
    "function_alg:2",
    "function_alg:3",
    "group_alg_z2",
];

pub const LIE_NAMES: &[&str] = &["abelian:2", "heisenberg", "oscillator", "sl2", "pelc:6"];

pub fn comm_battery() -> Vec<(String, CommAlgebra)> {
    COMM_NAMES
        .iter()
        .map(|n| (n.to_string(), catalog::lookup_comm(n).expect("battery entries are valid")))
        .collect()
}

pub fn lie_battery() -> Vec<(String, LieEntry)> {
    LIE_NAMES
        .iter()
        .map(|n| (n.to_string(), catalog::lookup_lie(n).expect("battery entries are valid")))
        .collect()
}

/// One (A, k) combination of the battery.
#[derive(Clone, Debug)]
pub struct BatteryPair {
    pub a_name: String,
    pub k_name: String,
    pub a: CommAlgebra,
    pub k: LieEntry,
}

impl BatteryPair {
    pub fn label(&self) -> String {
        format!("{} (x) {}", self.a_name, self.k_name)
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.k.algebra
    }
}

/// All pairs with dim A · dim k <= [`MAX_CURRENT_DIM`], A-major.
pub fn pairs() -> Vec<BatteryPair> {
    let ks = lie_battery();
    let mut out = Vec::new();
    for (a_name, a) in comm_battery() {
        for (k_name, k) in &ks {
            if a.dim() * k.algebra.dim() <= MAX_CURRENT_DIM {
                out.push(BatteryPair {
                    a_name: a_name.clone(),
                    k_name: k_name.clone(),
                    a: a.clone(),
                    k: k.clone(),
                });
            }
        }
    }
    out
}
