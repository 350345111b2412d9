//! Built-in algebras and their named witnesses.

use crate::combinatorics::{binomial, pair_index, subsets, sym_dim, sym_index};
use crate::comm::{CommAlgebra, CommBuilder};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LieBuilder};
use crate::linalg;
use crate::scalar::Scalar;

/// A named form or cochain attached to a catalog algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Symmetric bilinear form, coordinates κ(x_i, x_j) for `i <= j`.
    SymForm(Vec<Scalar>),
    /// Alternating 2-cochain, coordinates ω(x_i, x_j) for `i < j`.
    Cochain2(Vec<Scalar>),
}

#[derive(Clone, Debug)]
pub struct LieEntry {
    pub algebra: LieAlgebra,
    pub witnesses: Vec<(String, Witness)>,
}

impl LieEntry {
    fn bare(algebra: LieAlgebra) -> Self {
        LieEntry { algebra, witnesses: Vec::new() }
    }

    pub fn witness(&self, name: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|(n, _)| n == name).map(|(_, w)| w)
    }

    pub fn sym_form(&self, name: &str) -> Option<&[Scalar]> {
        match self.witness(name)? {
            Witness::SymForm(v) => Some(v),
            Witness::Cochain2(_) => None,
        }
    }

    pub fn cochain2(&self, name: &str) -> Option<&[Scalar]> {
        match self.witness(name)? {
            Witness::Cochain2(v) => Some(v),
            Witness::SymForm(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum CatalogItem {
    Lie(LieEntry),
    Comm(CommAlgebra),
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn strs(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Symmetric-form coordinates with the given nonzero entries.
pub fn sym_form(n: usize, entries: &[(usize, usize, Scalar)]) -> Vec<Scalar> {
    let mut v = linalg::zero_vec(sym_dim(n));
    for (i, j, c) in entries {
        v[sym_index(n, *i, *j)] += c;
    }
    v
}

pub fn heisenberg() -> LieAlgebra {
    let mut b = LieBuilder::new("heisenberg", strs(&["x", "y", "c"]));
    b.add(0, 1, 2, 1);
    b.build().expect("heisenberg")
}

/// The split oscillator algebra on x, y, c, d with [x,y]=c, [d,x]=x, [d,y]=−y.
pub fn oscillator() -> LieEntry {
    let mut b = LieBuilder::new("oscillator", strs(&["x", "y", "c", "d"]));
    b.add(0, 1, 2, 1).add(3, 0, 0, 1).add(3, 1, 1, -1);
    let algebra = b.build().expect("oscillator");
    let one = Scalar::ONE;
    LieEntry {
        witnesses: vec![
            ("kappa1".into(), Witness::SymForm(sym_form(4, &[(3, 3, one.clone())]))),
            (
                "kappa2".into(),
                Witness::SymForm(sym_form(4, &[(0, 1, one.clone()), (2, 3, one)])),
            ),
        ],
        algebra,
    }
}

pub fn sl2() -> LieEntry {
    let mut b = LieBuilder::new("sl2", strs(&["h", "e", "f"]));
    b.add(0, 1, 1, 2).add(0, 2, 2, -2).add(1, 2, 0, 1);
    let algebra = b.build().expect("sl2");
    let killing = sym_form(3, &[(0, 0, Scalar::from_int(8)), (1, 2, Scalar::from_int(4))]);
    LieEntry { algebra, witnesses: vec![("kappa".into(), Witness::SymForm(killing))] }
}

/// î ∈ {−1, 0, 1} with i − î ∈ 3ℤ.
pub fn pelc_hat(i: i64) -> i64 {
    (i.rem_euclid(3) + 1) % 3 - 1
}

/// Pelc's algebra on T_0..T_n with [T_i, T_j] = (i−j)^ T_{i+j} for i + j ≤ n.
pub fn pelc(n: usize) -> Result<LieEntry> {
    if n < 1 {
        return Err(Error::InvalidParameter("pelc needs n >= 1".into()));
    }
    let mut b = LieBuilder::new(format!("pelc{n}"), names("T", n + 1));
    for i in 0..=n {
        for j in i + 1..=n {
            if i + j <= n {
                let h = pelc_hat(i as i64 - j as i64);
                if h != 0 {
                    b.add(i, j, i + j, h);
                }
            }
        }
    }
    let algebra = b.build()?;
    let mut witnesses = Vec::new();
    if n.is_multiple_of(3) {
        let dim = n + 1;
        let kappa =
            sym_form(dim, &(0..=n / 2).map(|i| (i, n - i, Scalar::ONE)).collect::<Vec<_>>());
        // η(T_i, T_{n−i}) = a_i with a_i = (2/n)i − 1.
        let mut eta = linalg::zero_vec(binomial(dim, 2));
        for i in 0..=n {
            let j = n - i;
            if i < j {
                eta[pair_index(dim, i, j)] = Scalar::new(2 * i as i64, n as i64) - Scalar::ONE;
            }
        }
        witnesses.push(("kappa".into(), Witness::SymForm(kappa)));
        witnesses.push(("eta".into(), Witness::Cochain2(eta)));
    }
    Ok(LieEntry { algebra, witnesses })
}

/// T*_γ g = g* ⋊ g twisted by γ̃ ∈ Λ³(g)* (coordinates on increasing triples).
///
/// Basis: the basis of g, then its dual basis. Witnesses are the canonical
/// pairing κ((f,x),(f′,x′)) = f(x′) + f′(x) and η = f(x′) − f′(x).
pub fn twisted_magnetic(base: &LieAlgebra, gamma: Option<&[Scalar]>) -> Result<LieEntry> {
    let n = base.dim();
    if let Some(g) = gamma {
        if g.len() != binomial(n, 3) {
            return Err(Error::structural("twist must be given on Λ³ coordinates"));
        }
        let d = crate::lie::ce_differential(base, &crate::lie::KModule::trivial(base, 1), 3);
        if !linalg::is_zero_vec(&d.apply(g)) {
            return Err(Error::Precondition("twist is not a closed 3-form".into()));
        }
    }
    let mut basis: Vec<String> = base.basis_names().to_vec();
    basis.extend(base.basis_names().iter().map(|s| format!("{s}*")));
    let twisted = gamma.is_some_and(|g| !linalg::is_zero_vec(g));
    let name = if twisted {
        format!("magnetic({})", base.name())
    } else {
        format!("cotangent({})", base.name())
    };
    let mut b = LieBuilder::new(name, basis);
    for a in 0..n {
        for k in 0..n {
            // [x_a, x_k] in g
            base.for_bracket(a, k, |j, c| {
                if a < k {
                    b.add(a, k, j, c.clone());
                }
                // [x_a, e^j] = −Σ_k c^j_{ak} e^k
                b.add(a, n + j, n + k, -c);
            });
        }
    }
    if let Some(g) = gamma {
        for s in subsets(n, 3) {
            let c = &g[crate::combinatorics::subset_rank(n, &s)];
            if c.is_zero() {
                continue;
            }
            let (x, y, z) = (s[0], s[1], s[2]);
            // γ(x_a, x_b) = γ̃(x_a, x_b, ·) ∈ g*
            b.add(x, y, n + z, c.clone());
            b.add(y, z, n + x, c.clone());
            b.add(x, z, n + y, -c);
        }
    }
    let algebra = b.build()?;
    let dim = 2 * n;
    let kappa = sym_form(dim, &(0..n).map(|a| (a, n + a, Scalar::ONE)).collect::<Vec<_>>());
    let mut eta = linalg::zero_vec(binomial(dim, 2));
    for a in 0..n {
        eta[pair_index(dim, a, n + a)] = -Scalar::ONE;
    }
    Ok(LieEntry {
        algebra,
        witnesses: vec![
            ("kappa".into(), Witness::SymForm(kappa)),
            ("eta".into(), Witness::Cochain2(eta)),
        ],
    })
}

pub fn field() -> CommAlgebra {
    let mut b = CommBuilder::new("field", strs(&["1"]), vec![Scalar::ONE]);
    b.add(0, 0, 0, 1);
    b.build().expect("field")
}

/// 𝕂[t]/(tⁿ) on 1, t, …, t^{n−1}.
pub fn trunc_poly(n: usize) -> Result<CommAlgebra> {
    if n < 1 {
        return Err(Error::InvalidParameter("trunc_poly needs n >= 1".into()));
    }
    let basis = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        })
        .collect();
    let mut b = CommBuilder::new(format!("trunc_poly{n}"), basis, linalg::unit_vec(n, 0));
    for i in 0..n {
        for j in i..n {
            if i + j < n {
                b.add(i, j, i + j, 1);
            }
        }
    }
    b.build()
}

pub fn dual_numbers() -> CommAlgebra {
    let mut b = CommBuilder::new("dual_numbers", strs(&["1", "eps"]), linalg::unit_vec(2, 0));
    b.add(0, 0, 0, 1).add(0, 1, 1, 1);
    b.build().expect("dual numbers")
}

/// 𝕂ⁿ with pointwise product, on the idempotent basis.
pub fn function_alg(n: usize) -> Result<CommAlgebra> {
    if n < 1 {
        return Err(Error::InvalidParameter("function_alg needs n >= 1".into()));
    }
    let mut b = CommBuilder::new(format!("function_alg{n}"), names("e", n), vec![Scalar::ONE; n]);
    for i in 0..n {
        b.add(i, i, i, 1);
    }
    b.build()
}

/// ℚ[ℤ/2] on 1, g with g² = 1.
pub fn group_alg_z2() -> CommAlgebra {
    let mut b = CommBuilder::new("group_alg_z2", strs(&["1", "g"]), linalg::unit_vec(2, 0));
    b.add(0, 0, 0, 1).add(0, 1, 1, 1).add(1, 1, 0, 1);
    b.build().expect("group algebra")
}

fn parse_usize(p: Option<&str>, what: &str) -> Result<usize> {
    p.ok_or_else(|| Error::InvalidParameter(format!("{what} needs a parameter")))?
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("{what}: parameter must be a non-negative integer")))
}

/// Resolves `NAME[:PARAM...]`, e.g. `pelc:6` or `cotangent:heisenberg`.
pub fn lookup(spec: &str) -> Result<CatalogItem> {
    let (name, rest) = match spec.split_once(':') {
        Some((n, r)) => (n, Some(r)),
        None => (spec, None),
    };
    let no_param = |item: CatalogItem| match rest {
        Some(_) => Err(Error::InvalidParameter(format!("{name} takes no parameter"))),
        None => Ok(item),
    };
    match name {
        "abelian" => Ok(CatalogItem::Lie(LieEntry::bare(
            LieAlgebra::abelian(parse_usize(rest, "abelian")?),
        ))),
        "heisenberg" => no_param(CatalogItem::Lie(LieEntry::bare(heisenberg()))),
        "oscillator" => no_param(CatalogItem::Lie(oscillator())),
        "sl2" => no_param(CatalogItem::Lie(sl2())),
        "pelc" => Ok(CatalogItem::Lie(pelc(parse_usize(rest, "pelc")?)?)),
        "cotangent" => {
            let base = rest.ok_or_else(|| Error::InvalidParameter("cotangent needs a base".into()))?;
            match lookup(base)? {
                CatalogItem::Lie(e) => Ok(CatalogItem::Lie(twisted_magnetic(&e.algebra, None)?)),
                CatalogItem::Comm(_) => {
                    Err(Error::InvalidParameter("cotangent base must be a Lie algebra".into()))
                }
            }
        }
        "field" => no_param(CatalogItem::Comm(field())),
        "dual_numbers" => no_param(CatalogItem::Comm(dual_numbers())),
        "trunc_poly" => Ok(CatalogItem::Comm(trunc_poly(parse_usize(rest, "trunc_poly")?)?)),
        "function_alg" => Ok(CatalogItem::Comm(function_alg(parse_usize(rest, "function_alg")?)?)),
        "group_alg_z2" => no_param(CatalogItem::Comm(group_alg_z2())),
        other => Err(Error::InvalidParameter(format!("unknown catalog entry `{other}`"))),
    }
}

pub fn lookup_lie(spec: &str) -> Result<LieEntry> {
    match lookup(spec)? {
        CatalogItem::Lie(e) => Ok(e),
        CatalogItem::Comm(_) => Err(Error::InvalidParameter(format!("`{spec}` is not a Lie algebra"))),
    }
}

pub fn lookup_comm(spec: &str) -> Result<CommAlgebra> {
    match lookup(spec)? {
        CatalogItem::Comm(a) => Ok(a),
        CatalogItem::Lie(_) => {
            Err(Error::InvalidParameter(format!("`{spec}` is not a commutative algebra")))
        }
    }
}

/// Entry names with a representative parameter, as shown by `catalog list`.
pub const LISTING: &[&str] = &[
    "abelian:2",
    "heisenberg",
    "oscillator",
    "sl2",
    "pelc:3",
    "pelc:6",
    "cotangent:heisenberg",
    "field",
    "dual_numbers",
    "trunc_poly:3",
    "trunc_poly:4",
    "function_alg:2",
    "function_alg:3",
    "group_alg_z2",
];
