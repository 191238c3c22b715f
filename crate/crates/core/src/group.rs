//! Symbolic automorphism groups.
//!
//! One grammar, two readings. Classically `Triv` is the trivial group,
//! `Sym(n)` is `S_n`, `Product` is the direct product and `Wreath(b, n)` is
//! `b wr S_n`. Quantumly `Triv` is the trivial quantum group `C`, `Sym(n)`
//! is `S_n^+`, `Product` is the free product and `Wreath(b, n)` is the free
//! wreath product `b fwr S_n^+`. Expressions built here always have the
//! normal form produced by [`normalize_expr`]; two graphs get syntactically
//! comparable expressions, but distinct expressions are not claimed to
//! denote non-isomorphic quantum groups.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::blocks::is_block_graph;
use crate::cograph;
use crate::graph::Graph;
use crate::psi::{self, DecompositionNode, PsiError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order overflows 128 bits")]
    OrderOverflow,
    #[error("graph is neither a block graph nor a block-cograph")]
    Unsupported,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Triv,
    Sym(usize),
    Product(Vec<GroupExpr>),
    Wreath(Box<GroupExpr>, usize),
}

impl GroupExpr {
    pub fn wreath(base: GroupExpr, n: usize) -> GroupExpr {
        GroupExpr::Wreath(Box::new(base), n)
    }

    pub fn is_triv(&self) -> bool {
        matches!(self, GroupExpr::Triv)
    }

    /// Classical rendering, e.g. `(S2 wr S2)`.
    pub fn classical_text(&self) -> String {
        self.render(&Reading::Classical)
    }

    /// Quantum rendering, e.g. `(S2+ fwr S2+)`.
    pub fn quantum_text(&self) -> String {
        self.render(&Reading::Quantum)
    }

    fn render(&self, reading: &Reading) -> String {
        match self {
            GroupExpr::Triv => reading.triv().to_string(),
            GroupExpr::Sym(n) => reading.sym(*n),
            GroupExpr::Product(factors) => {
                let parts: Vec<String> = factors.iter().map(|f| f.render(reading)).collect();
                format!("({})", parts.join(reading.product()))
            }
            GroupExpr::Wreath(base, n) => {
                format!("({}{}{})", base.render(reading), reading.wreath(), reading.sym(*n))
            }
        }
    }
}

enum Reading {
    Classical,
    Quantum,
}

impl Reading {
    fn triv(&self) -> &'static str {
        match self {
            Reading::Classical => "1",
            Reading::Quantum => "C",
        }
    }

    fn sym(&self, n: usize) -> String {
        match self {
            Reading::Classical => format!("S{n}"),
            Reading::Quantum => format!("S{n}+"),
        }
    }

    fn product(&self) -> &'static str {
        match self {
            Reading::Classical => " x ",
            Reading::Quantum => " * ",
        }
    }

    fn wreath(&self) -> &'static str {
        match self {
            Reading::Classical => " wr ",
            Reading::Quantum => " fwr ",
        }
    }
}

/// Canonical syntax, used as the sort key of product factors:
/// `Triv`, `Sym(n)`, `Prod(a,b)`, `Wr(b,n)`.
impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Triv => f.write_str("Triv"),
            GroupExpr::Sym(n) => write!(f, "Sym({n})"),
            GroupExpr::Product(factors) => {
                f.write_str("Prod(")?;
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            GroupExpr::Wreath(base, n) => write!(f, "Wr({base},{n})"),
        }
    }
}

impl Serialize for GroupExpr {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Rewrites to normal form: `Sym(0)`, `Sym(1)` and `Wreath(_, 0)` become
/// `Triv`; `Wreath(b, 1)` becomes `b`; `Wreath(Triv, n)` becomes `Sym(n)`;
/// products are flattened, lose their `Triv` factors, collapse when fewer
/// than two factors remain, and are sorted by canonical text.
pub fn normalize_expr(e: &GroupExpr) -> GroupExpr {
    match e {
        GroupExpr::Triv => GroupExpr::Triv,
        GroupExpr::Sym(n) if *n <= 1 => GroupExpr::Triv,
        GroupExpr::Sym(n) => GroupExpr::Sym(*n),
        GroupExpr::Wreath(base, n) => {
            let base = normalize_expr(base);
            match (*n, base) {
                (0, _) => GroupExpr::Triv,
                (1, b) => b,
                (n, GroupExpr::Triv) => normalize_expr(&GroupExpr::Sym(n)),
                (n, b) => GroupExpr::wreath(b, n),
            }
        }
        GroupExpr::Product(factors) => {
            let mut flat = Vec::new();
            for f in factors {
                match normalize_expr(f) {
                    GroupExpr::Triv => {}
                    GroupExpr::Product(inner) => flat.extend(inner),
                    other => flat.push(other),
                }
            }
            match flat.len() {
                0 => GroupExpr::Triv,
                1 => flat.pop().expect("one factor"),
                _ => {
                    flat.sort_by_cached_key(|x| x.to_string());
                    GroupExpr::Product(flat)
                }
            }
        }
    }
}

/// `Product` over classes of `Wreath(expr, multiplicity)`; `items` must be
/// sorted so equal entries are adjacent.
pub(crate) fn product_of_classes<T: PartialEq>(items: &[T], expr: impl Fn(&T) -> GroupExpr) -> GroupExpr {
    let mut factors = Vec::new();
    let mut i = 0;
    while i < items.len() {
        let mut j = i + 1;
        while j < items.len() && items[j] == items[i] {
            j += 1;
        }
        factors.push(GroupExpr::wreath(expr(&items[i]), j - i));
        i = j;
    }
    normalize_expr(&GroupExpr::Product(factors))
}

/// Group of the rooted or anchored graph described by `node`.
pub fn expr_from_decomposition(node: &DecompositionNode) -> GroupExpr {
    use DecompositionNode::*;
    match node {
        LeafK1 => GroupExpr::Triv,
        DegreeOneRoot { child } => expr_from_decomposition(child),
        CutRoot { children } | BlockRoot { children } | TopCut { children } => {
            product_of_classes(children, expr_from_decomposition)
        }
        TopBlock { z, classes } => {
            let mut factors = vec![GroupExpr::Sym(*z)];
            factors.extend(
                classes
                    .iter()
                    .map(|c| GroupExpr::wreath(expr_from_decomposition(&c.node), c.multiplicity)),
            );
            normalize_expr(&GroupExpr::Product(factors))
        }
    }
}

/// Group of a (possibly disconnected) block graph: components are grouped
/// into isomorphism classes by canonical code.
pub fn block_graph_expr(g: &Graph) -> Result<GroupExpr, PsiError> {
    if !is_block_graph(g) {
        return Err(PsiError::NotBlockGraph);
    }
    let mut parts = Vec::new();
    for cell in g.connected_components() {
        let (sub, _) = g.induced_subgraph(&cell).expect("in range");
        parts.push((psi::canonical_code(&sub)?, sub));
    }
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    let codes: Vec<&String> = parts.iter().map(|(c, _)| c).collect();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let j = i + codes[i..].iter().take_while(|&&c| c == codes[i]).count();
        let base = expr_from_decomposition(&psi::decompose(&parts[i].1)?);
        factors.push(GroupExpr::wreath(base, j - i));
        i = j;
    }
    Ok(normalize_expr(&GroupExpr::Product(factors)))
}

fn factorial(n: usize) -> Result<u128, GroupError> {
    (2..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k).ok_or(GroupError::OrderOverflow))
}

/// Order of the classical reading.
pub fn classical_order(e: &GroupExpr) -> Result<u128, GroupError> {
    match e {
        GroupExpr::Triv => Ok(1),
        GroupExpr::Sym(n) => factorial(*n),
        GroupExpr::Product(factors) => factors.iter().try_fold(1u128, |acc, f| {
            acc.checked_mul(classical_order(f)?).ok_or(GroupError::OrderOverflow)
        }),
        GroupExpr::Wreath(base, n) => {
            let b = classical_order(base)?;
            let power = u32::try_from(*n)
                .ok()
                .and_then(|k| b.checked_pow(k))
                .ok_or(GroupError::OrderOverflow)?;
            power.checked_mul(factorial(*n)?).ok_or(GroupError::OrderOverflow)
        }
    }
}

/// Whether the algebra of the quantum reading is commutative. `S_n^+` is
/// commutative exactly for `n <= 3`; free products of two nontrivial
/// factors and free wreath products with nontrivial base are not.
pub fn is_commutative_quantum(e: &GroupExpr) -> bool {
    match normalize_expr(e) {
        GroupExpr::Triv => true,
        GroupExpr::Sym(n) => n <= 3,
        GroupExpr::Product(_) | GroupExpr::Wreath(..) => false,
    }
}

/// Which supported class a graph falls in, and its group expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    BlockGraph,
    BlockCograph,
}

pub fn classify(g: &Graph) -> Option<GraphClass> {
    if is_block_graph(g) {
        Some(GraphClass::BlockGraph)
    } else if cograph::cotree_decompose(g).is_some() {
        Some(GraphClass::BlockCograph)
    } else {
        None
    }
}

/// Group expression of a block graph or block-cograph.
pub fn graph_expr(g: &Graph) -> Result<GroupExpr, GroupError> {
    if is_block_graph(g) {
        return Ok(block_graph_expr(g).expect("checked block graph"));
    }
    cograph::expr_block_cograph(g).map_err(|_| GroupError::Unsupported)
}

/// Quantum symmetry of a block graph or block-cograph. On these classes it
/// holds exactly when Schmidt's criterion holds.
pub fn has_quantum_symmetry(g: &Graph) -> Result<bool, GroupError> {
    Ok(!is_commutative_quantum(&graph_expr(g)?))
}

/// Quantum asymmetry of a block graph or block-cograph, which coincides
/// with classical asymmetry on these classes.
pub fn is_quantum_asymmetric(g: &Graph) -> Result<bool, GroupError> {
    Ok(classical_order(&graph_expr(g)?)? == 1)
}
