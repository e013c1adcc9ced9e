//! Expression language, text format and table audits.

mod audit;
mod eval;
mod expr;
mod format;

pub use audit::{audit_text, Audit, AuditClaim, AUDIT_PROPERTIES};
pub use eval::{eval_expr, EvalError};
pub use expr::{parse_expr, parse_ring, AlgebraExpr, ParseError};
pub use format::{deserialize, parse_raw, serialize, FormatError, RawTables};
