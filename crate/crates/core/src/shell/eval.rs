use std::path::PathBuf;
use std::sync::Arc;

use thiserror::Error;

use super::expr::AlgebraExpr;
use super::format::{deserialize, FormatError};
use crate::census::lukasiewicz_chain;
use crate::ideal::{ideal_lattice, IdealError};
use crate::lattice::{direct_product, ResLattice};
use crate::ordinal::ordinal_product;
use crate::ring::{build_ring, RingError};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("algebra of size {size} exceeds the size cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
}

/// Evaluates an expression. `size_cap` bounds both ring carriers and the
/// order of every intermediate algebra.
pub fn eval_expr(expr: &AlgebraExpr, size_cap: usize) -> Result<ResLattice, EvalError> {
    let rl = match expr {
        AlgebraExpr::IdOf(ring) => {
            let ring = Arc::new(build_ring(ring, size_cap)?);
            ideal_lattice(&ring)?.lattice
        }
        AlgebraExpr::Luk(k) => {
            check_size(*k, size_cap)?;
            lukasiewicz_chain(*k)
        }
        AlgebraExpr::Ord(a, b) => {
            let (a, b) = (eval_expr(a, size_cap)?, eval_expr(b, size_cap)?);
            check_size(a.size() + b.size() - 1, size_cap)?;
            ordinal_product(&a, &b)
        }
        AlgebraExpr::ProductAlg(parts) => {
            let factors = parts
                .iter()
                .map(|p| eval_expr(p, size_cap))
                .collect::<Result<Vec<_>, _>>()?;
            let size = factors
                .iter()
                .try_fold(1usize, |acc, f| acc.checked_mul(f.size()))
                .unwrap_or(usize::MAX);
            check_size(size, size_cap)?;
            direct_product(&factors)
        }
        AlgebraExpr::Load(path) => {
            let path = PathBuf::from(path);
            let text = std::fs::read_to_string(&path).map_err(|source| EvalError::Io {
                path: path.clone(),
                source,
            })?;
            deserialize(&text).map_err(|source| EvalError::Format { path, source })?
        }
    };
    Ok(rl)
}

fn check_size(size: usize, cap: usize) -> Result<(), EvalError> {
    if size > cap {
        Err(EvalError::SizeCapExceeded { size, cap })
    } else {
        Ok(())
    }
}
