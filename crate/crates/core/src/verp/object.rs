//! Objects of Ver_p with their upstairs realizations.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ff_linalg::{JordanData, SparseMatrix};
use crate::rep_alphap::{self, AlphaObject};

/// Shared handle to a Ver_p object.
pub type Obj = Arc<VerObject>;

/// An object of Ver_p: a multiplicity vector over L_1, …, L_{p−1} together
/// with an upstairs realization and its Jordan decomposition.
#[derive(Clone, Debug)]
pub struct VerObject {
    p: u32,
    alpha: AlphaObject,
    jordan: JordanData,
    mult: Vec<usize>,
    by_type: Vec<Vec<usize>>,
    negligible: Vec<usize>,
}

impl PartialEq for VerObject {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.alpha == other.alpha && self.jordan == other.jordan
    }
}

/// JSON form of an object: `{"p":…, "mult":[…], "negligible":n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectSummary {
    pub p: u32,
    pub mult: Vec<usize>,
    pub negligible: usize,
}

impl VerObject {
    /// Builds an object from a realization and its Jordan data.
    pub fn from_parts(alpha: AlphaObject, jordan: JordanData) -> Self {
        let p = alpha.p();
        let mut by_type = vec![Vec::new(); p as usize - 1];
        let mut negligible = Vec::new();
        for (c, ch) in jordan.chains.iter().enumerate() {
            if ch.len < p as usize {
                by_type[ch.len - 1].push(c);
            } else {
                negligible.push(c);
            }
        }
        let mult = by_type.iter().map(Vec::len).collect();
        VerObject { p, alpha, jordan, mult, by_type, negligible }
    }

    /// Semisimplifies an upstairs object.
    pub fn from_alpha(alpha: AlphaObject) -> Result<Self> {
        let jordan = JordanData::of_sparse(alpha.t())?;
        Ok(Self::from_parts(alpha, jordan))
    }

    /// The standard realization ⊕_i L_i^{mult_i}, listed by increasing type.
    pub fn canonical(p: u32, mult: &[usize]) -> Obj {
        assert_eq!(mult.len(), p as usize - 1, "multiplicity vector must have length p - 1");
        let mut parts = Vec::new();
        for (k, &m) in mult.iter().enumerate() {
            for _ in 0..m {
                parts.push(AlphaObject::simple(p, k + 1));
            }
        }
        let refs: Vec<&AlphaObject> = parts.iter().collect();
        let alpha = AlphaObject::direct_sum(p, &refs);
        Arc::new(Self::from_alpha(alpha).expect("standard blocks are nilpotent"))
    }

    /// The simple object L_i.
    pub fn simple(p: u32, i: usize) -> Obj {
        assert!((1..p as usize).contains(&i), "L_{i} is not a simple object of Ver_{p}");
        let mut m = vec![0; p as usize - 1];
        m[i - 1] = 1;
        Self::canonical(p, &m)
    }

    pub fn unit(p: u32) -> Obj {
        Self::simple(p, 1)
    }

    pub fn zero(p: u32) -> Obj {
        Self::canonical(p, &vec![0; p as usize - 1])
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn alpha(&self) -> &AlphaObject {
        &self.alpha
    }

    pub fn jordan(&self) -> &JordanData {
        &self.jordan
    }

    /// Multiplicities of L_1, …, L_{p−1}.
    pub fn mult(&self) -> &[usize] {
        &self.mult
    }

    /// Multiplicity of L_i.
    pub fn mult_of(&self, i: usize) -> usize {
        self.mult[i - 1]
    }

    /// Chain indices of type L_i, in chain order.
    pub fn chains_of(&self, i: usize) -> &[usize] {
        &self.by_type[i - 1]
    }

    pub fn negligible_count(&self) -> usize {
        self.negligible.len()
    }

    pub fn dim_upstairs(&self) -> usize {
        self.alpha.dim()
    }

    /// Upstairs dimension of the non-negligible part, Σ i·mult_i.
    pub fn semisimple_dim(&self) -> usize {
        self.mult.iter().enumerate().map(|(k, m)| (k + 1) * m).sum()
    }

    /// True when the object is zero in Ver_p.
    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    /// True when the realization is the standard one for its multiplicities.
    pub fn is_canonical(&self) -> bool {
        self.negligible.is_empty() && *self == *Self::canonical(self.p, &self.mult)
    }

    pub fn summary(&self) -> ObjectSummary {
        ObjectSummary { p: self.p, mult: self.mult.clone(), negligible: self.negligible.len() }
    }

    /// Tensor product, with Jordan data assembled from the factors' blocks.
    pub fn tensor(a: &VerObject, b: &VerObject) -> Obj {
        assert_eq!(a.p, b.p);
        let alpha = rep_alphap::tensor(&a.alpha, &b.alpha);
        let jordan = JordanData::tensor(&a.jordan, &b.jordan).expect("tensor of nilpotents is nilpotent");
        Arc::new(Self::from_parts(alpha, jordan))
    }

    /// Iterated tensor product, associated left to right.
    pub fn tensor_all(p: u32, parts: &[&VerObject]) -> Obj {
        match parts {
            [] => Self::unit(p),
            [x] => Arc::new((*x).clone()),
            [first, rest @ ..] => rest.iter().fold(Arc::new((*first).clone()), |acc, x| Self::tensor(&acc, x)),
        }
    }

    /// Dual object, realized on the dual space with t* = −tᵀ.
    pub fn dual(&self) -> Obj {
        let alpha = rep_alphap::dual(&self.alpha);
        Arc::new(Self::from_alpha(alpha).expect("dual of a nilpotent is nilpotent"))
    }

    /// Direct sum; chains are listed part by part.
    pub fn direct_sum(p: u32, parts: &[&VerObject]) -> Obj {
        let alphas: Vec<&AlphaObject> = parts.iter().map(|x| &x.alpha).collect();
        let alpha = AlphaObject::direct_sum(p, &alphas);
        let jordans: Vec<&JordanData> = parts.iter().map(|x| &x.jordan).collect();
        Arc::new(Self::from_parts(alpha, JordanData::direct_sum(&jordans)))
    }

    /// The operator t of the realization.
    pub fn t(&self) -> &SparseMatrix {
        self.alpha.t()
    }
}

/// Renders a multiplicity vector as "L1 + 2L3"; the zero object is "0".
pub fn format_mult(mult: &[usize]) -> String {
    let terms: Vec<String> = mult
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(k, &m)| if m == 1 { format!("L{}", k + 1) } else { format!("{m}L{}", k + 1) })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

impl fmt::Display for VerObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_mult(&self.mult))
    }
}
