//! Integer partitions and their Young diagrams.
//!
//! Diagrams use English orientation: row 1 is the top row and cells are
//! addressed by 1-based `(row, col)` pairs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram, 1-based, row 1 on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for [usize; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl From<[usize; 2]> for Cell {
    fn from([row, col]: [usize; 2]) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition `λ = (λ_1 ≥ λ_2 ≥ … ≥ λ_ℓ > 0)`. The empty partition is valid.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts` without reordering them.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for (index, window) in parts.windows(2).enumerate() {
            if window[1] > window[0] {
                return Err(Error::NonIncreasingViolation {
                    index: index + 1,
                    part: window[1],
                    previous: window[0],
                });
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::EmptyOrMalformed(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    /// Parses the text form `"3,2,1"`. Empty text is the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|token| match token.trim().parse::<usize>() {
                Ok(part) if part > 0 => Ok(part),
                _ => Err(Error::EmptyOrMalformed(text.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number `k` being partitioned.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_1, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// λ_row for a 1-based row, 0 below the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// All cells in reading order (row by row, left to right).
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// Column lengths: `μ_j = #{i : λ_i ≥ j}`.
    pub fn transpose(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.transpose() == *self
    }

    /// Cells whose removal leaves a partition, top to bottom. There is one
    /// per distinct part value.
    pub fn inner_corners(&self) -> Result<Vec<Cell>> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(self
            .parts
            .iter()
            .enumerate()
            .filter(|&(i, &p)| self.parts.get(i + 1).is_none_or(|&next| next < p))
            .map(|(i, &p)| Cell::new(i + 1, p))
            .collect())
    }

    pub fn is_inner_corner(&self, cell: Cell) -> bool {
        self.contains(cell)
            && cell.col == self.row_len(cell.row)
            && self.row_len(cell.row + 1) < cell.col
    }

    /// `λ − v` for an inner corner `v`.
    pub fn remove_corner(&self, corner: Cell) -> Result<Partition> {
        if !self.is_inner_corner(corner) {
            return Err(Error::NotAnInnerCorner(corner));
        }
        let mut parts = self.parts.clone();
        parts[corner.row - 1] -= 1;
        if parts[corner.row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Positions whose addition yields a partition, top to bottom.
    pub fn outer_corners(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&row| row == 1 || self.row_len(row - 1) > self.row_len(row))
            .map(|row| Cell::new(row, self.row_len(row) + 1))
            .collect()
    }

    /// `(n − k, λ) ⊢ n`, the partition with a first row of length `n − k`
    /// put in front of `λ`.
    pub fn prepend_row(&self, n: usize) -> Result<Partition> {
        let row = n as i64 - self.weight() as i64;
        if row < self.first() as i64 {
            return Err(Error::RowTooShort {
                row,
                leading: self.first(),
            });
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        if row > 0 {
            parts.push(row as usize);
        }
        parts.extend_from_slice(&self.parts);
        Ok(Partition { parts })
    }

    /// The partition `(λ_2, …, λ_ℓ)` left after removing the first row.
    pub fn tail(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// The text form `"3,2,1"` (empty string for ∅).
    pub fn to_text(&self) -> String {
        self.parts
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Every partition of `k`, each exactly once, in reverse-lexicographic order
/// of parts: `k=3` gives `(3), (2,1), (1,1,1)`.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn extend(
        remaining: usize,
        max_part: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    extend(k, k, &mut Vec::new(), &mut out);
    out
}

/// All partitions of every `k` in `0..=max_k`, grouped by increasing `k`.
pub fn partitions_up_to(max_k: usize) -> Vec<Partition> {
    (0..=max_k).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        let two_one = Partition::parse("2,1").unwrap();
        assert_eq!(two_one.parts(), &[2, 1]);
        assert_eq!(two_one.weight(), 3);
        assert_eq!(two_one.len(), 2);

        let column = Partition::parse("1,1,1").unwrap();
        assert_eq!(column, Partition::column(3));
        assert_eq!(column.len(), 3);

        assert!(matches!(
            Partition::parse("2,3"),
            Err(Error::NonIncreasingViolation {
                index: 1,
                part: 3,
                previous: 2
            })
        ));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(matches!(
            Partition::parse("2,x"),
            Err(Error::EmptyOrMalformed(_))
        ));
        assert!(matches!(
            Partition::parse("2,0"),
            Err(Error::EmptyOrMalformed(_))
        ));
        assert!(matches!(
            Partition::parse("2,,1"),
            Err(Error::EmptyOrMalformed(_))
        ));
        assert!(matches!(
            Partition::parse("-1"),
            Err(Error::EmptyOrMalformed(_))
        ));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(p(&[3, 2, 1]).transpose(), p(&[3, 2, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn inner_corner_examples() {
        assert_eq!(
            p(&[2, 1]).inner_corners().unwrap(),
            vec![Cell::new(1, 2), Cell::new(2, 1)]
        );
        assert_eq!(
            Partition::column(5).inner_corners().unwrap(),
            vec![Cell::new(5, 1)]
        );
        assert_eq!(
            p(&[3, 2, 1]).inner_corners().unwrap(),
            vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]
        );
        assert_eq!(
            Partition::empty().inner_corners(),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn remove_corner_examples() {
        assert_eq!(
            p(&[2, 1]).remove_corner(Cell::new(1, 2)).unwrap(),
            p(&[1, 1])
        );
        assert_eq!(p(&[2, 1]).remove_corner(Cell::new(2, 1)).unwrap(), p(&[2]));
        assert_eq!(
            p(&[2, 1]).remove_corner(Cell::new(1, 1)),
            Err(Error::NotAnInnerCorner(Cell::new(1, 1)))
        );
        assert!(p(&[2, 1]).remove_corner(Cell::new(3, 1)).is_err());
    }

    #[test]
    fn prepend_row_examples() {
        assert_eq!(p(&[2, 1]).prepend_row(5).unwrap(), p(&[2, 2, 1]));
        assert_eq!(p(&[1, 1]).prepend_row(4).unwrap(), p(&[2, 1, 1]));
        assert_eq!(
            p(&[2, 1]).prepend_row(4),
            Err(Error::RowTooShort { row: 1, leading: 2 })
        );
        assert!(matches!(
            p(&[2, 1]).prepend_row(1),
            Err(Error::RowTooShort { row: -2, .. })
        ));
        assert_eq!(
            Partition::empty().prepend_row(0).unwrap(),
            Partition::empty()
        );
        assert_eq!(Partition::empty().prepend_row(3).unwrap(), p(&[3]));
    }

    #[test]
    fn partitions_of_examples() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_up_to(8).len(), 67);
    }

    #[test]
    fn outer_corners_of_two_one() {
        assert_eq!(
            p(&[2, 1]).outer_corners(),
            vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]
        );
        assert_eq!(Partition::empty().outer_corners(), vec![Cell::new(1, 1)]);
    }

    #[test]
    fn json_form_is_an_array() {
        let lambda = p(&[3, 2, 1]);
        assert_eq!(serde_json::to_string(&lambda).unwrap(), "[3,2,1]");
        let back: Partition = serde_json::from_str("[3,2,1]").unwrap();
        assert_eq!(back, lambda);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
