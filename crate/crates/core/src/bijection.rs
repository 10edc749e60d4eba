//! Explicit inverse bijections between `SYT_{h,α}(λ)` and `SYT_{h,α−1}(λ)`.
//!
//! Both maps are the identity on the intersection of the two sets. Off the
//! intersection they cyclically move the boxes holding `α, …, h+α`, pivoting
//! on `q` (going down) or `p` (going up); entries below `α` and above `h+α`
//! keep their boxes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};
use crate::tableau::StandardTableau;

/// `q = max{1 ≤ i ≤ h : R_T(i+α) ≤ R_T(α)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PivotQ(pub usize);

/// `p = min{0 ≤ i ≤ h−1 : R_T(h+α) ≤ R_T(i+α)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PivotP(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pivot {
    Q(PivotQ),
    P(PivotP),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `SYT_{h,α} → SYT_{h,α−1}`
    Down,
    /// `SYT_{h,α−1} → SYT_{h,α}`
    Up,
}

/// One application of a map, with the pivot used (absent on the identity branch).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapStep {
    pub output: StandardTableau,
    pub pivot: Option<Pivot>,
}

fn check_parameters(tableau: &StandardTableau, h: usize, alpha: usize) -> Result<()> {
    let k = tableau.size();
    if h == 0 || alpha == 0 || h + alpha > k {
        return Err(Error::AlphaOutOfRange { h, alpha, k });
    }
    Ok(())
}

/// Why `tableau` fails the `(h, α)`-condition, if it does.
fn condition_failure(tableau: &StandardTableau, h: usize, alpha: usize) -> Option<String> {
    (1..h)
        .find(|&i| tableau.row_of(i + 1 + alpha) <= tableau.row_of(i + alpha))
        .map(|i| {
            let m = i + alpha;
            format!(
                "entry {} is in row {}, not below entry {m} in row {} ((h,alpha)=({h},{alpha}))",
                m + 1,
                tableau.row_of(m + 1),
                tableau.row_of(m)
            )
        })
}

/// The pivot `q` of a tableau in `SYT_{h,α}(λ) \ SYT_{h,α−1}(λ)`.
pub fn compute_q(tableau: &StandardTableau, h: usize, alpha: usize) -> Result<PivotQ> {
    check_parameters(tableau, h, alpha).map_err(|e| Error::NotInDomain(e.to_string()))?;
    if let Some(reason) = condition_failure(tableau, h, alpha) {
        return Err(Error::NotInDomain(reason));
    }
    if tableau.rows_increase(h, alpha - 1) {
        return Err(Error::NotInDomain(format!(
            "tableau already satisfies the ({h},{}) condition",
            alpha - 1
        )));
    }
    let base = tableau.row_of(alpha);
    (1..=h)
        .rev()
        .find(|&i| tableau.row_of(i + alpha) <= base)
        .map(PivotQ)
        .ok_or_else(|| Error::NotInDomain("no index reaches the row of alpha".into()))
}

/// The pivot `p` of a tableau in `SYT_{h,α−1}(λ) \ SYT_{h,α}(λ)`.
pub fn compute_p(tableau: &StandardTableau, h: usize, alpha: usize) -> Result<PivotP> {
    check_parameters(tableau, h, alpha).map_err(|e| Error::NotInDomain(e.to_string()))?;
    if let Some(reason) = condition_failure(tableau, h, alpha - 1) {
        return Err(Error::NotInDomain(reason));
    }
    if tableau.rows_increase(h, alpha) {
        return Err(Error::NotInDomain(format!(
            "tableau already satisfies the ({h},{alpha}) condition"
        )));
    }
    let top = tableau.row_of(h + alpha);
    (0..h)
        .find(|&i| top <= tableau.row_of(i + alpha))
        .map(PivotP)
        .ok_or_else(|| Error::NotInDomain("no index dominates the row of h+alpha".into()))
}

fn relabel(
    tableau: &StandardTableau,
    source_of: impl Fn(usize) -> usize,
) -> Result<StandardTableau> {
    let cells: Vec<Cell> = (1..=tableau.size())
        .map(|m| tableau.cell_of(source_of(m)))
        .collect();
    StandardTableau::from_cells(tableau.shape().clone(), cells)
}

/// `SYT_{h,α}(λ) → SYT_{h,α−1}(λ)`, reporting the pivot.
pub fn down_step(tableau: &StandardTableau, h: usize, alpha: usize) -> Result<MapStep> {
    check_parameters(tableau, h, alpha)?;
    if let Some(reason) = condition_failure(tableau, h, alpha) {
        return Err(Error::NotInSourceSet(reason));
    }
    if tableau.rows_increase(h, alpha - 1) {
        return Ok(MapStep {
            output: tableau.clone(),
            pivot: None,
        });
    }
    let q = compute_q(tableau, h, alpha)?.0;
    let output = relabel(tableau, |m| {
        if m < alpha || m > h + alpha {
            m
        } else if m == q - 1 + alpha {
            alpha
        } else if m == h + alpha {
            q + alpha
        } else {
            // alpha ≤ m ≤ q−2+α or q+α ≤ m ≤ h−1+α
            m + 1
        }
    })?;
    Ok(MapStep {
        output,
        pivot: Some(Pivot::Q(PivotQ(q))),
    })
}

/// `SYT_{h,α−1}(λ) → SYT_{h,α}(λ)`, reporting the pivot.
pub fn up_step(tableau: &StandardTableau, h: usize, alpha: usize) -> Result<MapStep> {
    check_parameters(tableau, h, alpha)?;
    if let Some(reason) = condition_failure(tableau, h, alpha - 1) {
        return Err(Error::NotInSourceSet(reason));
    }
    if tableau.rows_increase(h, alpha) {
        return Ok(MapStep {
            output: tableau.clone(),
            pivot: None,
        });
    }
    let p = compute_p(tableau, h, alpha)?.0;
    let output = relabel(tableau, |m| {
        if m < alpha || m > h + alpha {
            m
        } else if m == alpha {
            p + alpha
        } else if m == p + 1 + alpha {
            h + alpha
        } else {
            // 1+α ≤ m ≤ p+α or p+2+α ≤ m ≤ h+α
            m - 1
        }
    })?;
    Ok(MapStep {
        output,
        pivot: Some(Pivot::P(PivotP(p))),
    })
}

/// The map `SYT_{h,α}(λ) → SYT_{h,α−1}(λ)`.
pub fn down_map(tableau: &StandardTableau, h: usize, alpha: usize) -> Result<StandardTableau> {
    down_step(tableau, h, alpha).map(|step| step.output)
}

/// The map `SYT_{h,α−1}(λ) → SYT_{h,α}(λ)`, inverse to [`down_map`].
pub fn up_map(tableau: &StandardTableau, h: usize, alpha: usize) -> Result<StandardTableau> {
    up_step(tableau, h, alpha).map(|step| step.output)
}

/// Moves `tableau ∈ SYT_{h,from}(λ)` to `SYT_{h,to}(λ)` one α at a time.
///
/// With `h = 0` every tableau lies in every `SYT_{0,α}(λ)` and the chain is
/// constant.
pub fn chain_to_alpha(
    tableau: &StandardTableau,
    h: usize,
    from_alpha: usize,
    to_alpha: usize,
) -> Result<StandardTableau> {
    let k = tableau.size();
    for alpha in [from_alpha, to_alpha] {
        if h + alpha > k {
            return Err(Error::WindowOutOfRange { h, alpha, k });
        }
    }
    if let Some(reason) = condition_failure(tableau, h, from_alpha) {
        return Err(Error::NotInSourceSet(reason));
    }
    if h == 0 {
        return Ok(tableau.clone());
    }
    let mut current = tableau.clone();
    if to_alpha < from_alpha {
        for alpha in (to_alpha + 1..=from_alpha).rev() {
            current = down_map(&current, h, alpha)?;
        }
    } else {
        for alpha in from_alpha + 1..=to_alpha {
            current = up_map(&current, h, alpha)?;
        }
    }
    Ok(current)
}

/// For `tableau ∈ SYT_{h,k−h}(λ)`, its images in `SYT_{h,α}(λ)` for
/// `α = 0, 1, …, k−h` (the last one is `tableau` itself).
pub fn alpha_chain(tableau: &StandardTableau, h: usize) -> Result<Vec<StandardTableau>> {
    let k = tableau.size();
    if h > k {
        return Err(Error::WindowOutOfRange { h, alpha: 0, k });
    }
    let top = k - h;
    let mut chain = vec![tableau.clone()];
    for alpha in (1..=top).rev() {
        let next = chain_to_alpha(chain.last().expect("non-empty"), h, alpha, alpha - 1)?;
        chain.push(next);
    }
    chain.reverse();
    Ok(chain)
}

/// JSON record of a single map application.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub shape: Partition,
    pub h: usize,
    pub alpha: usize,
    pub direction: Direction,
    pub input: StandardTableau,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pivot: Option<Pivot>,
    pub output: StandardTableau,
}

pub fn transcript(
    tableau: &StandardTableau,
    h: usize,
    alpha: usize,
    direction: Direction,
) -> Result<Transcript> {
    let step = match direction {
        Direction::Down => down_step(tableau, h, alpha)?,
        Direction::Up => up_step(tableau, h, alpha)?,
    };
    Ok(Transcript {
        shape: tableau.shape().clone(),
        h,
        alpha,
        direction,
        input: tableau.clone(),
        pivot: step.pivot,
        output: step.output,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> StandardTableau {
        StandardTableau::parse_text(text).unwrap()
    }

    #[test]
    fn q_examples() {
        assert_eq!(compute_q(&t("1 2 3 / 4 5 / 6"), 2, 2).unwrap(), PivotQ(1));
        assert_eq!(compute_q(&t("1 2 4 / 3 5 / 6"), 2, 1).unwrap(), PivotQ(1));
        // already in SYT_{2,1}
        assert!(matches!(
            compute_q(&t("1 2 4 / 3 5 / 6"), 2, 2),
            Err(Error::NotInDomain(_))
        ));
    }

    #[test]
    fn p_examples() {
        assert_eq!(compute_p(&t("1 2 4 / 3 5 / 6"), 2, 2).unwrap(), PivotP(0));
        assert_eq!(compute_p(&t("1 3 4 / 2 5 / 6"), 2, 1).unwrap(), PivotP(0));
        assert!(matches!(
            compute_p(&t("1 2 3 / 4 5 / 6"), 2, 2),
            Err(Error::NotInDomain(_))
        ));
    }

    #[test]
    fn down_examples() {
        assert_eq!(
            down_map(&t("1 2 3 / 4 5 / 6"), 2, 2).unwrap(),
            t("1 2 4 / 3 5 / 6")
        );
        assert_eq!(
            down_map(&t("1 2 4 / 3 5 / 6"), 2, 1).unwrap(),
            t("1 3 4 / 2 5 / 6")
        );
        let both = t("1 2 4 / 3 5 / 6");
        let step = down_step(&both, 2, 4).unwrap();
        assert_eq!(step.output, both);
        assert_eq!(step.pivot, None);
    }

    #[test]
    fn up_examples() {
        assert_eq!(
            up_map(&t("1 2 4 / 3 5 / 6"), 2, 2).unwrap(),
            t("1 2 3 / 4 5 / 6")
        );
        assert_eq!(
            up_map(&t("1 3 4 / 2 5 / 6"), 2, 1).unwrap(),
            t("1 2 4 / 3 5 / 6")
        );
        let both = t("1 2 4 / 3 5 / 6");
        assert_eq!(up_map(&both, 2, 4).unwrap(), both);
    }

    #[test]
    fn source_set_and_range_errors() {
        // 2 and 3 share row 1, so this is not in SYT_{2,1}
        assert!(matches!(
            down_map(&t("1 2 3 / 4 5 / 6"), 2, 1),
            Err(Error::NotInSourceSet(_))
        ));
        assert!(matches!(
            up_map(&t("1 2 3 / 4 5 / 6"), 2, 2),
            Err(Error::NotInSourceSet(_))
        ));
        assert!(matches!(
            down_map(&t("1 2 3 / 4 5 / 6"), 2, 5),
            Err(Error::AlphaOutOfRange {
                h: 2,
                alpha: 5,
                k: 6
            })
        ));
        assert!(matches!(
            down_map(&t("1 2 / 3"), 2, 0),
            Err(Error::AlphaOutOfRange { .. })
        ));
        assert!(matches!(
            down_map(&t("1 2 / 3"), 0, 1),
            Err(Error::AlphaOutOfRange { .. })
        ));
    }

    #[test]
    fn chain_examples() {
        let start = t("1 4 6 / 2 5 / 3");
        assert_eq!(
            chain_to_alpha(&start, 2, 0, 4).unwrap(),
            t("1 4 5 / 2 6 / 3")
        );
        assert_eq!(chain_to_alpha(&start, 2, 0, 0).unwrap(), start);
        for alpha in 0..=4 {
            let there = chain_to_alpha(&start, 2, 0, alpha).unwrap();
            assert_eq!(chain_to_alpha(&there, 2, alpha, 0).unwrap(), start);
        }
    }

    #[test]
    fn transcript_json() {
        let record = transcript(&t("1 2 3 / 4 5 / 6"), 2, 2, Direction::Down).unwrap();
        let json = serde_json::to_string(&record).unwrap();
        assert_eq!(
            json,
            concat!(
                r#"{"shape":[3,2,1],"h":2,"alpha":2,"direction":"down","#,
                r#""input":{"shape":[3,2,1],"rows":[[1,2,3],[4,5],[6]]},"pivot":{"q":1},"#,
                r#""output":{"shape":[3,2,1],"rows":[[1,2,4],[3,5],[6]]}}"#
            )
        );
        let identity = transcript(&t("1 2 4 / 3 5 / 6"), 2, 4, Direction::Down).unwrap();
        assert!(!serde_json::to_string(&identity).unwrap().contains("pivot"));
    }
}
