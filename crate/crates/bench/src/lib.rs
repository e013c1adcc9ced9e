//! Inputs shared by the benchmarks.

use std::sync::Arc;

use reslat_core::shell::parse_ring;
use reslat_core::{build_ring, FinRing, DEFAULT_SIZE_CAP};

/// Dual-number rings of increasing size, `Z_n[X]/(X^2)`.
pub const DUAL_RINGS: [&str; 4] = ["Z4[X]/(X^2)", "Z6[X]/(X^2)", "Z8[X]/(X^2)", "Z30[X]/(X^2)"];

pub fn ring(text: &str) -> Arc<FinRing> {
    let expr = parse_ring(text).expect("valid ring expression");
    Arc::new(build_ring(&expr, DEFAULT_SIZE_CAP).expect("ring within cap"))
}
