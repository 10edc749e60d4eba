//! Exhaustive verification of every identity the library relies on, over
//! all partitions up to a size bound.
//!
//! Each [`Check`] walks its cases and records a [`Failure`] for every
//! counterexample. Reports come back in registry order, so output is
//! deterministic.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Display;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bijection::{compute_p, compute_q, down_map, up_map};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Cell, Partition};
use crate::polynomial::{
    a_coefficients, binomial, dimension_via_mu_identity, fit_binomial_coefficients, fit_by_newton,
    BinomialPolynomial,
};
use crate::tableau::{dimension_hook, enumerate_syt, StandardTableau};

pub const DEFAULT_MAX_K: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub partition: Partition,
    pub params: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Passed,
    Failed,
    /// The bound is below the smallest size the check applies to.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub k_range: [usize; 2],
    pub cases_run: usize,
    pub status: Status,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Failed
    }
}

/// Shared state for one run: the partitions and their tableaux, computed once.
pub struct Context {
    max_k: usize,
    partitions: Vec<Partition>,
    tableaux: HashMap<Partition, Vec<StandardTableau>>,
}

impl Context {
    pub fn new(max_k: usize) -> Self {
        let partitions: Vec<Partition> = (0..=max_k).flat_map(partitions_of).collect();
        let tableaux = partitions
            .iter()
            .map(|p| (p.clone(), enumerate_syt(p)))
            .collect();
        Context {
            max_k,
            partitions,
            tableaux,
        }
    }

    fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.partitions.iter()
    }

    fn syt(&self, shape: &Partition) -> &[StandardTableau] {
        &self.tableaux[shape]
    }

    fn restricted(&self, shape: &Partition, h: usize, alpha: usize) -> Vec<&StandardTableau> {
        self.syt(shape)
            .iter()
            .filter(|t| t.rows_increase(h, alpha))
            .collect()
    }

    fn count(&self, shape: &Partition, h: usize, alpha: usize) -> usize {
        self.syt(shape)
            .iter()
            .filter(|t| t.rows_increase(h, alpha))
            .count()
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn record(
        &mut self,
        ok: bool,
        lambda: &Partition,
        params: impl FnOnce() -> String,
        expected: impl Display,
        actual: impl Display,
    ) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                partition: lambda.clone(),
                params: params(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn eq<T: PartialEq + Display>(
        &mut self,
        lambda: &Partition,
        params: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        let ok = expected == actual;
        self.record(ok, lambda, params, expected, actual);
    }

    fn holds(
        &mut self,
        lambda: &Partition,
        params: impl FnOnce() -> String,
        ok: bool,
        claim: &str,
    ) {
        self.record(
            ok,
            lambda,
            params,
            claim,
            if ok { "holds" } else { "violated" },
        );
    }

    fn error(&mut self, lambda: &Partition, params: impl FnOnce() -> String, error: Error) {
        self.record(false, lambda, params, "no error", error);
    }
}

fn none() -> String {
    String::new()
}

/// A registered identity check.
pub struct Check {
    pub name: &'static str,
    pub description: &'static str,
    /// Smallest partition size with any case.
    pub min_k: usize,
    run: fn(&Context, &mut Tally),
}

macro_rules! unwrap_or_fail {
    ($tally:expr, $lambda:expr, $params:expr, $value:expr) => {
        match $value {
            Ok(value) => value,
            Err(error) => {
                $tally.error($lambda, $params, error);
                continue;
            }
        }
    };
}

fn transpose_involution(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions() {
        tally.eq(lambda, none, lambda.clone(), lambda.transpose().transpose());
    }
}

fn transpose_swaps_length(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions() {
        let t = lambda.transpose();
        tally.eq(
            lambda,
            || "length of transpose".into(),
            lambda.first(),
            t.len(),
        );
        tally.eq(
            lambda,
            || "first part of transpose".into(),
            lambda.len(),
            t.first(),
        );
    }
}

fn corner_removal(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions().filter(|p| !p.is_empty()) {
        let corners = unwrap_or_fail!(tally, lambda, none, lambda.inner_corners());
        let distinct: BTreeSet<_> = lambda.parts().iter().collect();
        tally.eq(
            lambda,
            || "corner count".into(),
            distinct.len(),
            corners.len(),
        );

        let mut removed = BTreeSet::new();
        for &v in &corners {
            let smaller =
                unwrap_or_fail!(tally, lambda, || format!("v={v}"), lambda.remove_corner(v));
            let valid = Partition::new(smaller.parts().to_vec()).is_ok()
                && smaller.weight() + 1 == lambda.weight();
            tally.holds(
                lambda,
                || format!("v={v}"),
                valid,
                "λ−v is a partition of k−1",
            );
            removed.insert(smaller);
        }
        let decrements: BTreeSet<Partition> = (0..lambda.len())
            .filter_map(|i| {
                let mut parts = lambda.parts().to_vec();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.remove(i);
                }
                Partition::new(parts).ok()
            })
            .collect();
        tally.eq(
            lambda,
            || "single-part decrements".into(),
            format!("{decrements:?}"),
            format!("{removed:?}"),
        );
    }
}

fn syt_count_matches_hook(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions() {
        let hook = unwrap_or_fail!(tally, lambda, none, dimension_hook(lambda));
        tally.eq(lambda, none, hook, BigUint::from(ctx.syt(lambda).len()));
    }
}

fn branching_rule(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions().filter(|p| !p.is_empty()) {
        let whole = unwrap_or_fail!(tally, lambda, none, dimension_hook(lambda));
        let corners = unwrap_or_fail!(tally, lambda, none, lambda.inner_corners());
        let sum = corners.iter().try_fold(BigUint::zero(), |acc, &v| {
            Ok::<_, Error>(acc + dimension_hook(&lambda.remove_corner(v)?)?)
        });
        let sum = unwrap_or_fail!(tally, lambda, none, sum);
        tally.eq(lambda, none, whole, sum);
    }
}

fn sum_of_squares(ctx: &Context, tally: &mut Tally) {
    for k in 0..=ctx.max_k {
        let total: BigUint = partitions_of(k)
            .iter()
            .map(|p| {
                let f = BigUint::from(ctx.syt(p).len());
                &f * &f
            })
            .sum();
        let factorial: BigUint = (1..=k).map(BigUint::from).product();
        tally.eq(&Partition::column(k), || format!("k={k}"), factorial, total);
    }
}

fn last_entry_in_corner(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions().filter(|p| !p.is_empty()) {
        for t in ctx.syt(lambda) {
            let v = t.cell_of(t.size());
            tally.holds(
                lambda,
                || format!("T={t}"),
                lambda.is_inner_corner(v),
                "v_T(k) is an inner corner",
            );
        }
    }
}

fn tableau_transpose(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions() {
        let transposed: BTreeSet<Vec<Vec<usize>>> = ctx
            .syt(&lambda.transpose())
            .iter()
            .map(|t| t.rows().to_vec())
            .collect();
        for t in ctx.syt(lambda) {
            let tt = t.transpose();
            let ok = StandardTableau::from_rows(tt.shape().clone(), tt.rows().to_vec()).is_ok()
                && tt.shape() == &lambda.transpose()
                && transposed.contains(tt.rows())
                && tt.transpose() == *t;
            tally.holds(
                lambda,
                || format!("T={t}"),
                ok,
                "Tᵗ is a standard tableau of shape λᵗ and (Tᵗ)ᵗ = T",
            );
        }
    }
}

fn restricted_branching(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions().filter(|p| !p.is_empty()) {
        let k = lambda.weight();
        let corners = unwrap_or_fail!(tally, lambda, none, lambda.inner_corners());
        for h in 0..=lambda.len() {
            for alpha in 0..k.saturating_sub(h) {
                let sum: usize = corners
                    .iter()
                    .map(|&v| ctx.count(&lambda.remove_corner(v).expect("corner"), h, alpha))
                    .sum();
                tally.eq(
                    lambda,
                    || format!("h={h} alpha={alpha}"),
                    ctx.count(lambda, h, alpha),
                    sum,
                );
            }
        }
    }
}

fn two_row_transpose_split(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions().filter(|p| p.weight() >= 2) {
        let k = lambda.weight();
        let transpose = lambda.transpose();
        for alpha in 0..=k - 2 {
            let sum = ctx.count(lambda, 2, alpha) + ctx.count(&transpose, 2, alpha);
            tally.eq(
                lambda,
                || format!("alpha={alpha}"),
                ctx.syt(lambda).len(),
                sum,
            );
        }
    }
}

fn self_conjugate_pairing(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx
        .partitions()
        .filter(|p| p.weight() >= 2 && p.is_self_conjugate())
    {
        let k = lambda.weight();
        let all = ctx.syt(lambda);
        tally.holds(
            lambda,
            || "parity".into(),
            all.len().is_multiple_of(2),
            "f^λ is even",
        );
        for alpha in 0..=k - 2 {
            let chosen: HashSet<&StandardTableau> =
                ctx.restricted(lambda, 2, alpha).into_iter().collect();
            let images: HashSet<StandardTableau> = all
                .iter()
                .filter(|t| !chosen.contains(t))
                .map(StandardTableau::transpose)
                .collect();
            let ok = images.len() == chosen.len() && images.iter().all(|t| chosen.contains(t));
            tally.holds(
                lambda,
                || format!("alpha={alpha}"),
                ok,
                "transposition maps the complement onto SYT_{2,α}(λ)",
            );
        }
    }
}

/// Fitted polynomials, one per partition, computed on demand.
fn fits(ctx: &Context) -> Vec<(&Partition, Result<BinomialPolynomial>)> {
    ctx.partitions()
        .map(|p| (p, fit_binomial_coefficients(p)))
        .collect()
}

fn polynomial_matches_hook(ctx: &Context, tally: &mut Tally) {
    for (lambda, fit) in fits(ctx) {
        let fit = unwrap_or_fail!(tally, lambda, none, fit);
        let start = lambda.weight() + lambda.first();
        for n in start..=start + 10 {
            let shape = lambda.prepend_row(n).expect("long enough first row");
            let hook = unwrap_or_fail!(tally, lambda, || format!("n={n}"), dimension_hook(&shape));
            tally.eq(
                lambda,
                || format!("n={n}"),
                BigInt::from(hook),
                fit.evaluate(n as i64),
            );
        }
    }
}

fn signed_expansion_matches_hook(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions() {
        let a = unwrap_or_fail!(tally, lambda, none, a_coefficients(lambda));
        let start = lambda.weight() + lambda.first();
        for n in start..=start + 10 {
            let shape = lambda.prepend_row(n).expect("long enough first row");
            let hook = unwrap_or_fail!(tally, lambda, || format!("n={n}"), dimension_hook(&shape));
            tally.eq(
                lambda,
                || format!("n={n}"),
                BigInt::from(hook),
                a.evaluate(n as i64),
            );
        }
    }
}

fn newton_fit_agreement(ctx: &Context, tally: &mut Tally) {
    for (lambda, fit) in fits(ctx) {
        let fit = unwrap_or_fail!(tally, lambda, none, fit);
        let newton = unwrap_or_fail!(tally, lambda, none, fit_by_newton(lambda));
        tally.eq(
            lambda,
            none,
            serde_json::to_string(&newton).expect("json"),
            serde_json::to_string(&fit).expect("json"),
        );
    }
}

fn low_coefficients_vanish(ctx: &Context, tally: &mut Tally) {
    for (lambda, fit) in fits(ctx) {
        let fit = unwrap_or_fail!(tally, lambda, none, fit);
        let k = lambda.weight();
        let vanishing = k - lambda.len();
        for h in 0..vanishing {
            tally.eq(
                lambda,
                || format!("b_{h}"),
                BigInt::zero(),
                fit.coeffs()[h].clone(),
            );
        }
        // both directions, for every prefix length
        for t in 0..=k {
            let coeffs_zero = fit.coeffs()[..=t].iter().all(Zero::is_zero);
            let values_zero = (0..=t as i64).all(|m| fit.evaluate(m).is_zero());
            tally.eq(lambda, || format!("t={t}"), coeffs_zero, values_zero);
        }
    }
}

fn a_positive(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions() {
        let fit = unwrap_or_fail!(tally, lambda, none, fit_binomial_coefficients(lambda));
        for h in 0..=lambda.len() {
            let a = fit.signed_top_coefficient(h);
            tally.record(a > BigInt::zero(), lambda, || format!("h={h}"), "a > 0", a);
        }
    }
}

fn a01_equal_dimension(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions() {
        let a = unwrap_or_fail!(tally, lambda, none, a_coefficients(lambda));
        let f = BigInt::from(ctx.syt(lambda).len());
        tally.eq(lambda, || "h=0".into(), f.clone(), a.get(0));
        if !lambda.is_empty() {
            tally.eq(lambda, || "h=1".into(), f, a.get(1));
        }
    }
}

fn column_coefficients_one(ctx: &Context, tally: &mut Tally) {
    for k in 0..=ctx.max_k {
        let column = Partition::column(k);
        let a = unwrap_or_fail!(tally, &column, none, a_coefficients(&column));
        for h in 0..=k {
            tally.eq(&column, || format!("h={h}"), BigInt::from(1), a.get(h));
        }
    }
}

fn coefficient_branching(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions().filter(|p| !p.is_empty() && p.first() > 1) {
        let k = lambda.weight();
        let a = unwrap_or_fail!(tally, lambda, none, a_coefficients(lambda));
        let corners = unwrap_or_fail!(tally, lambda, none, lambda.inner_corners());
        let smaller = corners
            .iter()
            .map(|&v| a_coefficients(&lambda.remove_corner(v)?))
            .collect::<Result<Vec<_>>>();
        let smaller = unwrap_or_fail!(tally, lambda, none, smaller);
        for h in 0..k {
            let sum: BigInt = smaller.iter().map(|c| c.get(h)).sum();
            tally.eq(lambda, || format!("h={h}"), a.get(h), sum);
        }
    }
}

fn coeff_equals_count(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions() {
        let fit = unwrap_or_fail!(tally, lambda, none, fit_binomial_coefficients(lambda));
        for h in 0..=lambda.weight() {
            tally.eq(
                lambda,
                || format!("h={h}"),
                BigInt::from(ctx.count(lambda, h, 0)),
                fit.signed_top_coefficient(h),
            );
        }
    }
}

fn binomial_reflection(_ctx: &Context, tally: &mut Tally) {
    let empty = Partition::empty();
    for n in -20i64..=20 {
        for h in 0i64..=10 {
            let direct = binomial(n, h).expect("non-negative order");
            let reflected = binomial(h - 1 - n, h).expect("non-negative order");
            let reflected = if h % 2 == 0 { reflected } else { -reflected };
            tally.eq(&empty, || format!("n={n} h={h}"), direct, reflected);
        }
    }
}

fn mu_identity(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions().filter(|p| !p.is_empty()) {
        let via_mu = unwrap_or_fail!(tally, lambda, none, dimension_via_mu_identity(lambda));
        let hook = unwrap_or_fail!(tally, lambda, none, dimension_hook(lambda));
        tally.eq(lambda, none, BigInt::from(hook), via_mu);
    }
}

fn alpha_independence(ctx: &Context, tally: &mut Tally) {
    for lambda in ctx.partitions() {
        let k = lambda.weight();
        for h in 1..=lambda.len() {
            let base = ctx.count(lambda, h, 0);
            for alpha in 1..=k - h {
                tally.eq(
                    lambda,
                    || format!("h={h} alpha={alpha}"),
                    base,
                    ctx.count(lambda, h, alpha),
                );
            }
        }
    }
}

/// Every `(λ, h, α)` with `1 ≤ h ≤ ℓ(λ)` and `1 ≤ α ≤ k − h`.
fn map_parameters(ctx: &Context) -> Vec<(&Partition, usize, usize)> {
    ctx.partitions()
        .flat_map(|lambda| {
            let k = lambda.weight();
            (1..=lambda.len()).flat_map(move |h| (1..=k - h).map(move |alpha| (lambda, h, alpha)))
        })
        .collect()
}

fn maps_land_in_target(ctx: &Context, tally: &mut Tally) {
    for (lambda, h, alpha) in map_parameters(ctx) {
        for t in ctx.restricted(lambda, h, alpha) {
            let params = || format!("h={h} alpha={alpha} down T={t}");
            let image = unwrap_or_fail!(tally, lambda, params, down_map(t, h, alpha));
            let ok = image.rows_increase(h, alpha - 1) && image.shape() == lambda;
            tally.holds(lambda, params, ok, "down map lands in SYT_{h,α−1}(λ)");
        }
        for s in ctx.restricted(lambda, h, alpha - 1) {
            let params = || format!("h={h} alpha={alpha} up S={s}");
            let image = unwrap_or_fail!(tally, lambda, params, up_map(s, h, alpha));
            let ok = image.rows_increase(h, alpha) && image.shape() == lambda;
            tally.holds(lambda, params, ok, "up map lands in SYT_{h,α}(λ)");
        }
    }
}

fn maps_are_inverse(ctx: &Context, tally: &mut Tally) {
    for (lambda, h, alpha) in map_parameters(ctx) {
        for t in ctx.restricted(lambda, h, alpha) {
            let params = || format!("h={h} alpha={alpha} T={t}");
            let round = down_map(t, h, alpha).and_then(|d| up_map(&d, h, alpha));
            let round = unwrap_or_fail!(tally, lambda, params, round);
            tally.eq(lambda, params, t.clone(), round);
        }
        for s in ctx.restricted(lambda, h, alpha - 1) {
            let params = || format!("h={h} alpha={alpha} S={s}");
            let round = up_map(s, h, alpha).and_then(|u| down_map(&u, h, alpha));
            let round = unwrap_or_fail!(tally, lambda, params, round);
            tally.eq(lambda, params, s.clone(), round);
        }
    }
}

fn identity_on_intersection(ctx: &Context, tally: &mut Tally) {
    for (lambda, h, alpha) in map_parameters(ctx) {
        for t in ctx
            .restricted(lambda, h, alpha)
            .into_iter()
            .filter(|t| t.rows_increase(h, alpha - 1))
        {
            let params = || format!("h={h} alpha={alpha} T={t}");
            let down = unwrap_or_fail!(tally, lambda, params, down_map(t, h, alpha));
            let up = unwrap_or_fail!(tally, lambda, params, up_map(t, h, alpha));
            tally.holds(
                lambda,
                params,
                down == *t && up == *t,
                "both maps fix the intersection",
            );
        }
    }
}

fn pivot_duality(ctx: &Context, tally: &mut Tally) {
    for (lambda, h, alpha) in map_parameters(ctx)
        .into_iter()
        .filter(|(l, h, a)| l.weight() == h + a)
    {
        for t in ctx.restricted(lambda, h, alpha) {
            if t.rows_increase(h, alpha - 1) {
                continue;
            }
            let params = || format!("h={h} alpha={alpha} down T={t}");
            let q = unwrap_or_fail!(tally, lambda, params, compute_q(t, h, alpha)).0;
            let image = unwrap_or_fail!(tally, lambda, params, down_map(t, h, alpha));
            let p = unwrap_or_fail!(tally, lambda, params, compute_p(&image, h, alpha)).0;
            tally.eq(lambda, params, q - 1, p);
        }
        for s in ctx.restricted(lambda, h, alpha - 1) {
            if s.rows_increase(h, alpha) {
                continue;
            }
            let params = || format!("h={h} alpha={alpha} up S={s}");
            let p = unwrap_or_fail!(tally, lambda, params, compute_p(s, h, alpha)).0;
            let image = unwrap_or_fail!(tally, lambda, params, up_map(s, h, alpha));
            let q = unwrap_or_fail!(tally, lambda, params, compute_q(&image, h, alpha)).0;
            tally.eq(lambda, params, p + 1, q);
        }
    }
}

fn corner_pivot(ctx: &Context, tally: &mut Tally) {
    for (lambda, h, alpha) in map_parameters(ctx)
        .into_iter()
        .filter(|(l, h, a)| l.weight() == h + a)
    {
        for t in ctx.restricted(lambda, h, alpha) {
            if t.rows_increase(h, alpha - 1) {
                continue;
            }
            let params = || format!("h={h} alpha={alpha} T={t}");
            let q = unwrap_or_fail!(tally, lambda, params, compute_q(t, h, alpha)).0;
            let v: Cell = t.cell_of(q + alpha);
            tally.holds(
                lambda,
                params,
                lambda.is_inner_corner(v),
                "v_T(q+α) is an inner corner",
            );
        }
    }
}

fn branching_equivariance(ctx: &Context, tally: &mut Tally) {
    for (lambda, h, alpha) in map_parameters(ctx)
        .into_iter()
        .filter(|(l, h, a)| l.weight() > h + a)
    {
        for t in ctx.restricted(lambda, h, alpha) {
            let params = || format!("h={h} alpha={alpha} down T={t}");
            let (smaller, v) = t.remove_largest().expect("non-empty");
            let whole = unwrap_or_fail!(tally, lambda, params, down_map(t, h, alpha));
            let part = unwrap_or_fail!(tally, lambda, params, down_map(&smaller, h, alpha));
            tally.holds(
                lambda,
                params,
                whole.remove_largest() == Some((part, v)),
                "removing k commutes with the down map",
            );
        }
        for s in ctx.restricted(lambda, h, alpha - 1) {
            let params = || format!("h={h} alpha={alpha} up S={s}");
            let (smaller, v) = s.remove_largest().expect("non-empty");
            let whole = unwrap_or_fail!(tally, lambda, params, up_map(s, h, alpha));
            let part = unwrap_or_fail!(tally, lambda, params, up_map(&smaller, h, alpha));
            tally.holds(
                lambda,
                params,
                whole.remove_largest() == Some((part, v)),
                "removing k commutes with the up map",
            );
        }
    }
}

/// Strip the entries above `h+α`, apply the map on the smaller shape, put
/// the stripped boxes back.
fn strip_apply_restore(
    t: &StandardTableau,
    h: usize,
    alpha: usize,
    map: fn(&StandardTableau, usize, usize) -> Result<StandardTableau>,
) -> Result<StandardTableau> {
    let core = map(&t.restrict(h + alpha), h, alpha)?;
    let mut cells = core.cells().to_vec();
    cells.extend_from_slice(&t.cells()[h + alpha..]);
    StandardTableau::from_cells(t.shape().clone(), cells)
}

fn strip_apply_restore_agreement(ctx: &Context, tally: &mut Tally) {
    for (lambda, h, alpha) in map_parameters(ctx) {
        for t in ctx.restricted(lambda, h, alpha) {
            let params = || format!("h={h} alpha={alpha} down T={t}");
            let direct = unwrap_or_fail!(tally, lambda, params, down_map(t, h, alpha));
            let staged = unwrap_or_fail!(
                tally,
                lambda,
                params,
                strip_apply_restore(t, h, alpha, down_map)
            );
            tally.eq(lambda, params, staged, direct);
        }
        for s in ctx.restricted(lambda, h, alpha - 1) {
            let params = || format!("h={h} alpha={alpha} up S={s}");
            let direct = unwrap_or_fail!(tally, lambda, params, up_map(s, h, alpha));
            let staged = unwrap_or_fail!(
                tally,
                lambda,
                params,
                strip_apply_restore(s, h, alpha, up_map)
            );
            tally.eq(lambda, params, staged, direct);
        }
    }
}

static REGISTRY: &[Check] = &[
    Check {
        name: "transpose_involution",
        description: "(λᵗ)ᵗ = λ",
        min_k: 0,
        run: transpose_involution,
    },
    Check {
        name: "transpose_swaps_length",
        description: "ℓ(λᵗ) = λ_1 and (λᵗ)_1 = ℓ(λ)",
        min_k: 0,
        run: transpose_swaps_length,
    },
    Check {
        name: "corner_removal",
        description: "inner corners are exactly the removable boxes, one per distinct part",
        min_k: 1,
        run: corner_removal,
    },
    Check {
        name: "syt_count_matches_hook",
        description: "|SYT(λ)| = k!/∏ hooks",
        min_k: 0,
        run: syt_count_matches_hook,
    },
    Check {
        name: "branching_rule",
        description: "f^λ = Σ_v f^(λ−v)",
        min_k: 1,
        run: branching_rule,
    },
    Check {
        name: "sum_of_squares",
        description: "Σ_λ (f^λ)² = k!",
        min_k: 0,
        run: sum_of_squares,
    },
    Check {
        name: "last_entry_in_corner",
        description: "the box holding k is an inner corner",
        min_k: 1,
        run: last_entry_in_corner,
    },
    Check {
        name: "tableau_transpose",
        description: "transposition is a standard-preserving involution SYT(λ) → SYT(λᵗ)",
        min_k: 0,
        run: tableau_transpose,
    },
    Check {
        name: "restricted_branching",
        description: "f_{h,α}^λ = Σ_v f_{h,α}^(λ−v) for α < k−h",
        min_k: 1,
        run: restricted_branching,
    },
    Check {
        name: "two_row_transpose_split",
        description: "f_{2,α}^λ + f_{2,α}^(λᵗ) = f^λ",
        min_k: 2,
        run: two_row_transpose_split,
    },
    Check {
        name: "self_conjugate_pairing",
        description:
            "for λ = λᵗ, f^λ is even and transposition pairs the complement with SYT_{2,α}(λ)",
        min_k: 3,
        run: self_conjugate_pairing,
    },
    Check {
        name: "polynomial_matches_hook",
        description: "the fitted polynomial equals f^(n−k,λ)",
        min_k: 0,
        run: polynomial_matches_hook,
    },
    Check {
        name: "signed_expansion_matches_hook",
        description: "Σ (−1)^h a_h binom(n,k−h) = f^(n−k,λ)",
        min_k: 0,
        run: signed_expansion_matches_hook,
    },
    Check {
        name: "newton_fit_agreement",
        description: "rational Newton interpolation gives the same integral coefficients",
        min_k: 0,
        run: newton_fit_agreement,
    },
    Check {
        name: "low_coefficients_vanish",
        description: "b_h = 0 for h < k−ℓ(λ); low coefficients vanish iff low values vanish",
        min_k: 0,
        run: low_coefficients_vanish,
    },
    Check {
        name: "a_positive",
        description: "a_{λ,h} > 0 for h ≤ ℓ(λ)",
        min_k: 0,
        run: a_positive,
    },
    Check {
        name: "a01_equal_dimension",
        description: "a_{λ,0} = a_{λ,1} = f^λ",
        min_k: 0,
        run: a01_equal_dimension,
    },
    Check {
        name: "column_coefficients_one",
        description: "a_{(1^k),h} = 1",
        min_k: 0,
        run: column_coefficients_one,
    },
    Check {
        name: "coefficient_branching",
        description: "a_{λ,h} = Σ_v a_{λ−v,h} for λ ≠ (1^k)",
        min_k: 2,
        run: coefficient_branching,
    },
    Check {
        name: "coeff_equals_count",
        description: "a_{λ,h} = |SYT_{h,0}(λ)| for all h ≤ k",
        min_k: 0,
        run: coeff_equals_count,
    },
    Check {
        name: "binomial_reflection",
        description: "p_h(n) = (−1)^h p_h(h−1−n)",
        min_k: 0,
        run: binomial_reflection,
    },
    Check {
        name: "mu_identity",
        description: "f^λ = Σ (−1)^h f_h^μ binom(k, |μ|−h) with μ = (λ_2, …)",
        min_k: 1,
        run: mu_identity,
    },
    Check {
        name: "alpha_independence",
        description: "f_{h,α}^λ does not depend on α",
        min_k: 2,
        run: alpha_independence,
    },
    Check {
        name: "maps_land_in_target",
        description: "the down and up maps land in the claimed sets",
        min_k: 2,
        run: maps_land_in_target,
    },
    Check {
        name: "maps_are_inverse",
        description: "the down and up maps are mutually inverse",
        min_k: 2,
        run: maps_are_inverse,
    },
    Check {
        name: "identity_on_intersection",
        description: "both maps fix SYT_{h,α} ∩ SYT_{h,α−1}",
        min_k: 2,
        run: identity_on_intersection,
    },
    Check {
        name: "pivot_duality",
        description: "p(down(T)) = q(T)−1 and q(up(S)) = p(S)+1 when k = h+α",
        min_k: 2,
        run: pivot_duality,
    },
    Check {
        name: "corner_pivot",
        description: "v_T(q+α) is an inner corner when k = h+α",
        min_k: 2,
        run: corner_pivot,
    },
    Check {
        name: "branching_equivariance",
        description: "removing the box of k commutes with both maps when k > h+α",
        min_k: 3,
        run: branching_equivariance,
    },
    Check {
        name: "strip_apply_restore",
        description: "the general maps equal strip / apply at k = h+α / restore",
        min_k: 2,
        run: strip_apply_restore_agreement,
    },
];

/// Every registered check, in report order.
pub fn registry() -> &'static [Check] {
    REGISTRY
}

/// Runs all checks (or only `filter`) over every `λ ⊢ k ≤ max_k`.
pub fn run(max_k: usize, filter: Option<&str>) -> Result<Vec<VerificationReport>> {
    if max_k == 0 {
        return Err(Error::InvalidBound("max_k must be at least 1".into()));
    }
    let selected: Vec<&Check> = match filter {
        None => REGISTRY.iter().collect(),
        Some(name) => {
            let check = REGISTRY
                .iter()
                .find(|c| c.name == name)
                .ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
            vec![check]
        }
    };
    let ctx = Context::new(max_k);
    Ok(selected
        .into_iter()
        .map(|check| {
            if check.min_k > max_k {
                return VerificationReport {
                    check: check.name.to_string(),
                    k_range: [check.min_k, max_k],
                    cases_run: 0,
                    status: Status::Skipped,
                    failures: Vec::new(),
                };
            }
            let mut tally = Tally::default();
            (check.run)(&ctx, &mut tally);
            let status = if tally.failures.is_empty() {
                Status::Passed
            } else {
                Status::Failed
            };
            VerificationReport {
                check: check.name.to_string(),
                k_range: [check.min_k, max_k],
                cases_run: tally.cases,
                status,
                failures: tally.failures,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_bound_and_unknown_checks() {
        assert!(matches!(run(0, None), Err(Error::InvalidBound(_))));
        assert!(matches!(run(3, Some("nope")), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn small_bound_skips_checks_that_do_not_apply() {
        let reports = run(1, None).unwrap();
        for report in &reports {
            let check = registry().iter().find(|c| c.name == report.check).unwrap();
            if check.min_k > 1 {
                assert_eq!(report.status, Status::Skipped);
            } else {
                assert_eq!(report.status, Status::Passed, "{}", report.check);
                assert!(report.cases_run > 0, "{}", report.check);
            }
        }
    }

    #[test]
    fn failures_are_recorded() {
        let mut tally = Tally::default();
        let lambda = Partition::column(2);
        tally.eq(&lambda, || "h=1".into(), 1, 2);
        tally.eq(&lambda, || "h=2".into(), 3, 3);
        assert_eq!(tally.cases, 2);
        assert_eq!(
            tally.failures,
            vec![Failure {
                partition: lambda,
                params: "h=1".into(),
                expected: "1".into(),
                actual: "2".into(),
            }]
        );
    }

    #[test]
    fn strip_apply_restore_matches_direct_map_on_table_example() {
        let t = StandardTableau::parse_text("1 2 3 / 4 5 / 6").unwrap();
        assert_eq!(
            strip_apply_restore(&t, 2, 2, down_map).unwrap(),
            down_map(&t, 2, 2).unwrap()
        );
    }
}
