//! Evaluation orders of an n-factor product.
//!
//! A [`ProductTree`] is a full binary tree whose in-order leaves are the
//! factor positions `1..=n`: a tree changes how a product is bracketed, never
//! the order of the factors.
//!
//! [`enumerate_trees`] lists trees by split position. For `n` leaves it tries
//! every split `s = 1..n-1`, pairing each tree over `1..=s` (outer loop) with
//! each tree over `s+1..=n` (inner loop). For four factors `w x y z` this
//! gives, in order:
//!
//! | index | tree          |
//! |-------|---------------|
//! | 0     | `w(x(yz))`    |
//! | 1     | `w((xy)z)`    |
//! | 2     | `(wx)(yz)`    |
//! | 3     | `(w(xy))z`    |
//! | 4     | `((wx)y)z`    |

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::scalar::Scalar;

pub const MAX_ENUMERATION_FACTORS: usize = 12;
pub const MAX_MATRIX_FACTORS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProductTree {
    Leaf(usize),
    Node(Box<ProductTree>, Box<ProductTree>),
}

impl ProductTree {
    pub fn leaf(position: usize) -> Self {
        ProductTree::Leaf(position)
    }

    pub fn node(left: ProductTree, right: ProductTree) -> Self {
        ProductTree::Node(Box::new(left), Box::new(right))
    }

    /// `((x1 x2) x3) ... xn`
    pub fn left_comb(n: usize) -> Self {
        assert!(n >= 1);
        (2..=n).fold(ProductTree::Leaf(1), |acc, k| {
            ProductTree::node(acc, ProductTree::Leaf(k))
        })
    }

    /// `x1 (x2 (... xn))`
    pub fn right_comb(n: usize) -> Self {
        assert!(n >= 1);
        (1..n).rev().fold(ProductTree::Leaf(n), |acc, k| {
            ProductTree::node(ProductTree::Leaf(k), acc)
        })
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            ProductTree::Leaf(_) => 1,
            ProductTree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Leaf positions in in-order traversal.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            ProductTree::Leaf(k) => out.push(*k),
            ProductTree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// True if the in-order leaves are exactly `1..=n`.
    pub fn is_well_formed(&self) -> bool {
        self.leaves().into_iter().eq(1..=self.leaf_count())
    }

    /// Renders the tree with the given factor names, e.g. `((x*y)*z)`.
    pub fn render(&self, names: &[String]) -> String {
        match self {
            ProductTree::Leaf(k) => names.get(k - 1).cloned().unwrap_or_else(|| format!("x{k}")),
            ProductTree::Node(l, r) => format!("({}*{})", l.render(names), r.render(names)),
        }
    }

    /// Multiplies the factors in the order this tree prescribes.
    pub fn evaluate<S: Scalar>(&self, factors: &[Octonion<S>]) -> Result<Octonion<S>> {
        check_shape(self, factors.len())?;
        Ok(self.eval_unchecked(factors))
    }

    pub(crate) fn eval_unchecked<S: Scalar>(&self, factors: &[Octonion<S>]) -> Octonion<S> {
        match self {
            ProductTree::Leaf(k) => factors[k - 1].clone(),
            ProductTree::Node(l, r) => l
                .eval_unchecked(factors)
                .multiply(&r.eval_unchecked(factors)),
        }
    }
}

impl fmt::Display for ProductTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&[]))
    }
}

fn check_shape(tree: &ProductTree, factors: usize) -> Result<()> {
    let leaves = tree.leaf_count();
    if leaves != factors || !tree.is_well_formed() {
        return Err(Error::ShapeMismatch { leaves, factors });
    }
    Ok(())
}

fn check_range(what: &'static str, value: usize, max: usize) -> Result<()> {
    if !(1..=max).contains(&value) {
        return Err(Error::OutOfRange {
            what,
            value,
            min: 1,
            max,
        });
    }
    Ok(())
}

/// All bracketings of an `n`-factor product, `1 <= n <= 12`, in the canonical
/// order described in the module docs. There are Catalan(n-1) of them.
pub fn enumerate_trees(n: usize) -> Result<Vec<ProductTree>> {
    check_range("factor count", n, MAX_ENUMERATION_FACTORS)?;
    Ok(trees_over(1, n))
}

fn trees_over(lo: usize, hi: usize) -> Vec<ProductTree> {
    if lo == hi {
        return vec![ProductTree::Leaf(lo)];
    }
    let mut out = Vec::new();
    for split in lo..hi {
        let rights = trees_over(split + 1, hi);
        for left in trees_over(lo, split) {
            for right in &rights {
                out.push(ProductTree::node(left.clone(), right.clone()));
            }
        }
    }
    out
}

fn check_nonzero<S: Scalar>(factors: &[Octonion<S>]) -> Result<()> {
    match factors.iter().position(Octonion::is_zero) {
        Some(k) => Err(Error::ZeroDivision {
            operand: format!("factor {}", k + 1),
        }),
        None => Ok(()),
    }
}

/// `inverse(p_i) * p_j`, where `p_k` is the product evaluated under tree `k`
/// of [`enumerate_trees`]. Indices are zero-based.
pub fn generalized_associator<S: Scalar>(
    i: usize,
    j: usize,
    factors: &[Octonion<S>],
) -> Result<Octonion<S>> {
    let trees = enumerate_trees(factors.len())?;
    for index in [i, j] {
        if index >= trees.len() {
            return Err(Error::IndexError {
                index,
                count: trees.len(),
            });
        }
    }
    associator_between(&trees[i], &trees[j], factors)
}

/// `inverse(from(factors)) * to(factors)` for two explicit trees.
pub fn associator_between<S: Scalar>(
    from: &ProductTree,
    to: &ProductTree,
    factors: &[Octonion<S>],
) -> Result<Octonion<S>> {
    check_nonzero(factors)?;
    let p_from = from.evaluate(factors)?;
    let p_to = to.evaluate(factors)?;
    Ok(p_from.inverse_named(&from.to_string())?.multiply(&p_to))
}

/// Every pairwise associator between the evaluation orders of one factor
/// sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct AssociatorMatrix<S: Scalar> {
    n: usize,
    trees: Vec<ProductTree>,
    products: Vec<Octonion<S>>,
    entries: Vec<Vec<Octonion<S>>>,
}

/// Outcome of testing `a_ij * a_jk = a_ik` across all index triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainCensus {
    pub triples: usize,
    pub holding: usize,
}

impl<S: Scalar> AssociatorMatrix<S> {
    /// Builds the matrix for `1 <= factors.len() <= 8` nonzero factors.
    /// Rows are computed in parallel; the result is identical to a sequential
    /// build.
    pub fn new(factors: &[Octonion<S>]) -> Result<Self> {
        check_range("factor count", factors.len(), MAX_MATRIX_FACTORS)?;
        check_nonzero(factors)?;
        let trees = enumerate_trees(factors.len())?;
        let products: Vec<Octonion<S>> = trees
            .par_iter()
            .map(|t| t.eval_unchecked(factors))
            .collect();
        let inverses = products
            .iter()
            .zip(&trees)
            .map(|(p, t)| p.inverse_named(&t.to_string()))
            .collect::<Result<Vec<_>>>()?;
        let entries = inverses
            .par_iter()
            .map(|inv| products.iter().map(|p| inv.multiply(p)).collect())
            .collect();
        Ok(AssociatorMatrix {
            n: factors.len(),
            trees,
            products,
            entries,
        })
    }

    pub fn factor_count(&self) -> usize {
        self.n
    }

    pub fn trees(&self) -> &[ProductTree] {
        &self.trees
    }

    /// The product under each tree, in tree order.
    pub fn products(&self) -> &[Octonion<S>] {
        &self.products
    }

    pub fn size(&self) -> usize {
        self.trees.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Octonion<S> {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Octonion<S>>] {
        &self.entries
    }

    pub fn has_unit_diagonal(&self, tolerance: &S) -> Result<bool> {
        let one = Octonion::one();
        for (i, row) in self.entries.iter().enumerate() {
            if !row[i].equals(&one, tolerance)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_conjugate_symmetric(&self, tolerance: &S) -> Result<bool> {
        for i in 0..self.size() {
            for j in i..self.size() {
                if !self.entries[j][i].equals(&self.entries[i][j].conjugate(), tolerance)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn all_unit_norm(&self, tolerance: &S) -> Result<bool> {
        let one = Octonion::one();
        for a in self.entries.iter().flatten() {
            if !Octonion::real(a.norm_sq()).equals(&one, tolerance)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Counts the index triples for which `a_ij * a_jk = a_ik`. Nothing
    /// requires this to hold in a non-associative algebra; the census only
    /// reports what happens.
    pub fn chain_census(&self, tolerance: &S) -> Result<ChainCensus> {
        let m = self.size();
        let mut holding = 0;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let chained = self.entries[i][j].multiply(&self.entries[j][k]);
                    if chained.equals(&self.entries[i][k], tolerance)? {
                        holding += 1;
                    }
                }
            }
        }
        Ok(ChainCensus {
            triples: m * m * m,
            holding,
        })
    }

    /// Plain-text table. Row and column labels are one-based tree numbers.
    pub fn render_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|a| a.to_string()).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1)
            .max(self.size().to_string().len() + 1);
        let label = self.size().to_string().len() + 1;
        let mut out = format!("{:label$}", "");
        for j in 0..self.size() {
            out.push_str(&format!(" | {:>width$}", format!("p{}", j + 1)));
        }
        out.push('\n');
        for (i, row) in cells.iter().enumerate() {
            out.push_str(&format!("{:<label$}", format!("p{}", i + 1)));
            for cell in row {
                out.push_str(&format!(" | {cell:>width$}"));
            }
            out.push('\n');
        }
        out
    }

    /// One line per entry: `i<TAB>j<TAB>c0,...,c7`, one-based indices.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                out.push_str(&format!("{}\t{}\t{}\n", i + 1, j + 1, a.to_machine()));
            }
        }
        out
    }
}
