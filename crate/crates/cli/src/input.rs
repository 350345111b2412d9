//! Resolution of input references: `catalog:NAME[:PARAM...]`, a file path, or `-`.

use crate::report::Failure;
use curralg::catalog::{self, CatalogItem};
use curralg::comm::CommAlgebra;
use curralg::io::{comm_to_json, lie_to_json, parse_algebra, AlgebraFile};
use curralg::lie::LieAlgebra;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::io::Read;

pub enum Algebra {
    Lie(LieAlgebra),
    Comm(CommAlgebra),
}

pub struct Input {
    pub reference: String,
    pub algebra: Algebra,
    /// Hex SHA-256 of the file bytes, or of the exported file for catalog entries.
    pub sha256: String,
}

impl Input {
    pub fn name(&self) -> &str {
        match &self.algebra {
            Algebra::Lie(l) => l.name(),
            Algebra::Comm(a) => a.name(),
        }
    }

    pub fn dim(&self) -> usize {
        match &self.algebra {
            Algebra::Lie(l) => l.dim(),
            Algebra::Comm(a) => a.dim(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.algebra {
            Algebra::Lie(_) => "lie",
            Algebra::Comm(_) => "commutative",
        }
    }

    pub fn describe(&self) -> Value {
        json!({
            "reference": self.reference,
            "kind": self.kind(),
            "name": self.name(),
            "dim": self.dim(),
            "sha256": self.sha256,
        })
    }

    pub fn lie(&self) -> Result<&LieAlgebra, Failure> {
        match &self.algebra {
            Algebra::Lie(l) => Ok(l),
            Algebra::Comm(_) => Err(Failure::input(format!("{} is not a Lie algebra", self.reference))),
        }
    }

    pub fn comm(&self) -> Result<&CommAlgebra, Failure> {
        match &self.algebra {
            Algebra::Comm(a) => Ok(a),
            Algebra::Lie(_) => {
                Err(Failure::input(format!("{} is not a commutative algebra", self.reference)))
            }
        }
    }
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Resolves every reference up front so that no computation starts on a bad job.
pub fn resolve_all(refs: &[String]) -> Result<Vec<Input>, Failure> {
    if refs.iter().filter(|r| r.as_str() == "-").count() > 1 {
        return Err(Failure::input("standard input can be used at most once"));
    }
    refs.iter().map(|r| resolve(r)).collect()
}

pub fn resolve(reference: &str) -> Result<Input, Failure> {
    if let Some(spec) = reference.strip_prefix("catalog:") {
        let (algebra, text) = match catalog::lookup(spec)? {
            CatalogItem::Lie(e) => {
                let text = lie_to_json(&e.algebra);
                (Algebra::Lie(e.algebra), text)
            }
            CatalogItem::Comm(a) => {
                let text = comm_to_json(&a);
                (Algebra::Comm(a), text)
            }
        };
        return Ok(Input { reference: reference.to_string(), algebra, sha256: digest(text.as_bytes()) });
    }
    let (text, origin) = if reference == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("reading standard input: {e}")))?;
        (s, "<stdin>".to_string())
    } else {
        let s = std::fs::read_to_string(reference)
            .map_err(|e| Failure::input(format!("{reference}: {e}")))?;
        (s, reference.to_string())
    };
    let parsed = parse_algebra(&text, &origin).map_err(|e| {
        let mut f = Failure::from(e);
        // Builder errors (Jacobi, associativity, unit) do not know the source.
        if !f.message.contains(&origin) {
            f.message = format!("{origin}: {}", f.message);
        }
        f
    })?;
    let algebra = match parsed {
        AlgebraFile::Lie(l) => Algebra::Lie(l),
        AlgebraFile::Comm(a) => Algebra::Comm(a),
    };
    Ok(Input { reference: reference.to_string(), algebra, sha256: digest(text.as_bytes()) })
}
