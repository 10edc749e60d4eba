//! Standard Young tableaux, the hook formula, and the restricted sets
//! `SYT_{h,α}(λ)` of tableaux whose entries `1+α, …, h+α` lie in strictly
//! increasing rows.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

/// A standard filling of a shape by `1..=k`.
///
/// Both views are kept: `rows[i][j]` is the entry in cell `(i+1, j+1)` and
/// `cells[m-1]` is the cell holding `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    cells: Vec<Cell>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauJson> for StandardTableau {
    type Error = Error;

    fn try_from(json: TableauJson) -> Result<Self> {
        StandardTableau::from_rows(json.shape, json.rows)
    }
}

impl From<StandardTableau> for TableauJson {
    fn from(t: StandardTableau) -> Self {
        TableauJson {
            shape: t.shape,
            rows: t.rows,
        }
    }
}

impl StandardTableau {
    /// Builds a tableau from its rows, checking the shape, that the filling
    /// is a bijection onto `1..=k`, and standardness.
    pub fn from_rows(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let row_lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        if row_lengths != shape.parts() {
            return Err(Error::MalformedTableau(format!(
                "row lengths {row_lengths:?} do not match shape {shape}"
            )));
        }
        let k = shape.weight();
        let mut cells = vec![None; k];
        for (i, row) in rows.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                if entry == 0 || entry > k {
                    return Err(Error::MalformedTableau(format!(
                        "entry {entry} is outside 1..={k}"
                    )));
                }
                if cells[entry - 1].replace(Cell::new(i + 1, j + 1)).is_some() {
                    return Err(Error::MalformedTableau(format!(
                        "entry {entry} appears twice"
                    )));
                }
            }
        }
        let cells = cells.into_iter().map(Option::unwrap).collect();
        let tableau = StandardTableau { shape, rows, cells };
        tableau.check_standard()?;
        Ok(tableau)
    }

    /// Builds a tableau from the cell holding each entry: `cells[m-1]` holds `m`.
    pub fn from_cells(shape: Partition, cells: Vec<Cell>) -> Result<Self> {
        if cells.len() != shape.weight() {
            return Err(Error::MalformedTableau(format!(
                "{} entries for a shape of size {}",
                cells.len(),
                shape.weight()
            )));
        }
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
        for (index, &cell) in cells.iter().enumerate() {
            if !shape.contains(cell) {
                return Err(Error::CellOutsideShape(cell));
            }
            let slot = &mut rows[cell.row - 1][cell.col - 1];
            if *slot != 0 {
                return Err(Error::MalformedTableau(format!("{cell} is filled twice")));
            }
            *slot = index + 1;
        }
        let tableau = StandardTableau { shape, rows, cells };
        tableau.check_standard()?;
        Ok(tableau)
    }

    /// Parses the text form `"1 3 4 / 2 5 / 6"`; the shape is read off the rows.
    pub fn parse_text(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let rows = if trimmed.is_empty() {
            Vec::new()
        } else {
            trimmed
                .split('/')
                .map(|row| {
                    row.split_whitespace()
                        .map(|token| {
                            token.parse::<usize>().map_err(|_| {
                                Error::MalformedTableau(format!("bad entry {token:?}"))
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?
        };
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::MalformedTableau(e.to_string()))?;
        StandardTableau::from_rows(shape, rows)
    }

    fn check_standard(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                if j + 1 < row.len() && row[j + 1] <= entry {
                    return Err(Error::NotStandard(format!(
                        "row {} is not increasing at column {}",
                        i + 1,
                        j + 1
                    )));
                }
                if let Some(&below) = self.rows.get(i + 1).and_then(|r| r.get(j)) {
                    if below <= entry {
                        return Err(Error::NotStandard(format!(
                            "column {} is not increasing at row {}",
                            j + 1,
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry-to-cell view: `cells()[m-1]` is `v_T(m)`.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Number of entries `k`.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// The cell holding `m` (1-based).
    pub fn cell_of(&self, m: usize) -> Cell {
        self.cells[m - 1]
    }

    /// Row of the entry `m`.
    pub fn row_of(&self, m: usize) -> usize {
        self.cells[m - 1].row
    }

    /// Column of the entry `m`.
    pub fn col_of(&self, m: usize) -> usize {
        self.cells[m - 1].col
    }

    pub fn entry_at(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    /// `Tᵗ`: the tableau of shape `λᵗ` with the entry of `(i,j)` moved to `(j,i)`.
    pub fn transpose(&self) -> StandardTableau {
        let shape = self.shape.transpose();
        let rows = (0..shape.len())
            .map(|j| (0..shape.parts()[j]).map(|i| self.rows[i][j]).collect())
            .collect();
        let cells = self.cells.iter().map(|c| Cell::new(c.col, c.row)).collect();
        StandardTableau { shape, rows, cells }
    }

    /// Removes the box holding the largest entry `k`, returning the smaller
    /// tableau of shape `λ − v_T(k)` together with that box.
    pub fn remove_largest(&self) -> Option<(StandardTableau, Cell)> {
        let corner = *self.cells.last()?;
        let shape = self
            .shape
            .remove_corner(corner)
            .expect("the largest entry of a standard tableau sits in an inner corner");
        let mut rows = self.rows.clone();
        rows[corner.row - 1].pop();
        if rows[corner.row - 1].is_empty() {
            rows.pop();
        }
        let cells = self.cells[..self.cells.len() - 1].to_vec();
        Some((StandardTableau { shape, rows, cells }, corner))
    }

    /// Adds the entry `k+1` in `cell`, which must be an outer corner.
    pub fn add_largest(&self, cell: Cell) -> Result<StandardTableau> {
        if !self.shape.outer_corners().contains(&cell) {
            return Err(Error::MalformedTableau(format!(
                "{cell} is not an outer corner of {}",
                self.shape
            )));
        }
        let mut parts = self.shape.parts().to_vec();
        let mut rows = self.rows.clone();
        if cell.row > parts.len() {
            parts.push(0);
            rows.push(Vec::new());
        }
        parts[cell.row - 1] += 1;
        rows[cell.row - 1].push(self.size() + 1);
        let mut cells = self.cells.clone();
        cells.push(cell);
        Ok(StandardTableau {
            shape: Partition::new(parts)?,
            rows,
            cells,
        })
    }

    /// The sub-tableau formed by the entries `1..=m`.
    pub fn restrict(&self, m: usize) -> StandardTableau {
        let mut current = self.clone();
        while current.size() > m {
            current = current.remove_largest().expect("non-empty").0;
        }
        current
    }

    /// Rows joined by `" / "`, entries separated by spaces.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }

    /// Whether `1+α, …, h+α` lie in strictly increasing rows, without
    /// range checks. Entries past `k` make the condition fail.
    pub(crate) fn rows_increase(&self, h: usize, alpha: usize) -> bool {
        if h <= 1 {
            return true;
        }
        if h + alpha > self.size() {
            return false;
        }
        (1..h).all(|i| self.row_of(i + 1 + alpha) > self.row_of(i + alpha))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_text())
    }
}

/// The `(h, α)` pair selecting which run of entries must climb rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RestrictionWindow {
    pub h: usize,
    pub alpha: usize,
}

impl RestrictionWindow {
    pub const fn new(h: usize, alpha: usize) -> Self {
        RestrictionWindow { h, alpha }
    }

    /// Checks `h + α ≤ k`.
    pub fn validate(&self, k: usize) -> Result<()> {
        if self.h + self.alpha > k {
            return Err(Error::WindowOutOfRange {
                h: self.h,
                alpha: self.alpha,
                k,
            });
        }
        Ok(())
    }
}

/// Size of the hook of `cell`: the cell, everything to its right, and
/// everything below it.
pub fn hook_length(shape: &Partition, cell: Cell) -> Result<usize> {
    if !shape.contains(cell) {
        return Err(Error::CellOutsideShape(cell));
    }
    let arm = shape.row_len(cell.row) - cell.col;
    let leg = shape.parts()[cell.row..]
        .iter()
        .take_while(|&&len| len >= cell.col)
        .count();
    Ok(arm + leg + 1)
}

/// `f^λ = k! / ∏ h_v`, exact.
pub fn dimension_hook(shape: &Partition) -> Result<BigUint> {
    let k = shape.weight();
    let factorial: BigUint = (1..=k).map(BigUint::from).product();
    let hooks = shape
        .cells()
        .map(|cell| hook_length(shape, cell).map(BigUint::from))
        .try_fold(BigUint::one(), |acc, h| h.map(|h| acc * h))?;
    let (quotient, remainder) = factorial.div_rem(&hooks);
    if !remainder.is_zero() {
        return Err(Error::InternalInexactDivision(shape.to_string()));
    }
    Ok(quotient)
}

/// Every standard tableau of `shape`, in canonical order.
///
/// Entries `1..=k` are placed one at a time; each goes into the admissible
/// cell with the smallest `(row, col)` first, and the search backtracks
/// through the remaining choices.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    fn fill(
        shape: &Partition,
        filled: &mut Vec<usize>,
        cells: &mut Vec<Cell>,
        out: &mut Vec<StandardTableau>,
    ) {
        if cells.len() == shape.weight() {
            let tableau = StandardTableau::from_cells(shape.clone(), cells.clone())
                .expect("forward filling only produces standard tableaux");
            out.push(tableau);
            return;
        }
        for row in 0..shape.len() {
            let admissible =
                filled[row] < shape.parts()[row] && (row == 0 || filled[row - 1] > filled[row]);
            if !admissible {
                continue;
            }
            filled[row] += 1;
            cells.push(Cell::new(row + 1, filled[row]));
            fill(shape, filled, cells, out);
            cells.pop();
            filled[row] -= 1;
        }
    }

    let mut out = Vec::new();
    fill(
        shape,
        &mut vec![0; shape.len()],
        &mut Vec::with_capacity(shape.weight()),
        &mut out,
    );
    out
}

/// Whether `tableau` satisfies the `(h, α)`-condition:
/// `R_T(i+1+α) > R_T(i+α)` for all `1 ≤ i < h`.
pub fn satisfies_condition(tableau: &StandardTableau, window: RestrictionWindow) -> Result<bool> {
    window.validate(tableau.size())?;
    Ok(tableau.rows_increase(window.h, window.alpha))
}

/// `SYT_{h,α}(λ)` in canonical enumeration order.
pub fn enumerate_restricted(
    shape: &Partition,
    window: RestrictionWindow,
) -> Result<Vec<StandardTableau>> {
    window.validate(shape.weight())?;
    Ok(enumerate_syt(shape)
        .into_iter()
        .filter(|t| t.rows_increase(window.h, window.alpha))
        .collect())
}

/// `f^λ_{h,α} = |SYT_{h,α}(λ)|`.
pub fn count_restricted(shape: &Partition, window: RestrictionWindow) -> Result<usize> {
    window.validate(shape.weight())?;
    Ok(enumerate_syt(shape)
        .iter()
        .filter(|t| t.rows_increase(window.h, window.alpha))
        .count())
}
