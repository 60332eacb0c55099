//! Self-checks grouped into suites, each reporting one outcome per check.
//!
//! Random inputs come from a ChaCha stream seeded by the caller, so a run is
//! reproducible from its seed.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{phi_restricted_with, restricted_power_sum, SieveTables};
use crate::census::{
    enumerate, haar_volumes, height_profile_bruteforce, Census, CensusConfig, ClassSetId, MainTerms,
};
use crate::classes::{ClassKind, TauQuadruple, WrPair};
use crate::lattice::{GramForm, UnimodularMatrix, UpperHalfPoint};
use crate::modular::{
    boundary_realness_report, classify_by_j, j_invariant, j_invariant_exact, j_normalized, ComplexPoint,
};
use crate::rational::{int, ratio, to_f64, Rational};

/// Upper bound asserted on the normalized deviation of the restricted power
/// sums; the largest measured value for `b ≤ 5000` is reported alongside.
pub const POWER_SUM_CONSTANT: f64 = 4.0;

/// Heights along which the count deviations are tracked.
pub const ASYMPTOTIC_HEIGHTS: [u64; 4] = [50, 100, 200, 400];

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_owned(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(name: &str, r: Result<(bool, String), String>) -> Self {
        match r {
            Ok((passed, detail)) => Self::new(name, passed, detail),
            Err(e) => Self::new(name, false, format!("error: {e}")),
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Asymptotics,
    Euler,
    Haar,
    Modular,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "counts" => Suite::Counts,
            "asymptotics" => Suite::Asymptotics,
            "euler" => Suite::Euler,
            "haar" => Suite::Haar,
            "modular" => Suite::Modular,
            "all" => Suite::All,
            other => return Err(format!("unknown suite `{other}`")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub census: CensusConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            census: CensusConfig::default(),
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    match suite {
        Suite::Counts => vec![
            check_oracle_equivalence(40, opts.census),
            check_golden_counts(opts.census),
            check_geometry_consistency(20, &mut rng),
            check_height_bounds(50, 200),
        ],
        Suite::Asymptotics => vec![
            check_main_term_constants(),
            check_asymptotic_convergence(&ASYMPTOTIC_HEIGHTS, opts.census),
        ],
        Suite::Euler => vec![
            check_restricted_totient_bound(10_000, 20, &mut rng),
            check_divisor_bounds(10_000),
            check_power_sum_calibration(5000),
            check_totient_sum_convergence(),
        ],
        Suite::Haar => vec![check_haar()],
        Suite::Modular => vec![
            check_reduction_invariance(1000, 10, &mut rng),
            check_j_special_values(),
            check_j_invariance(100, &mut rng),
            check_boundary_realness(300),
            check_arc(100),
            check_classify_by_j(20),
        ],
        Suite::All => [Suite::Counts, Suite::Asymptotics, Suite::Euler, Suite::Haar, Suite::Modular]
            .iter()
            .flat_map(|&s| run_suite(s, opts))
            .collect(),
    }
}

fn census(bound: usize, config: CensusConfig) -> Result<Census, String> {
    Census::new(bound, config).map_err(|e| e.to_string())
}

/// Fast counts against the brute-force census for every `T ≤ max_t`.
pub fn check_oracle_equivalence(max_t: u64, config: CensusConfig) -> CheckOutcome {
    let run = || -> Result<(bool, String), String> {
        let fast = census(max_t as usize, config)?;
        let profile = height_profile_bruteforce(max_t).map_err(|e| e.to_string())?;
        for t in 1..=max_t {
            for set in ClassSetId::ALL {
                let f = fast.count_fast(set, t).map_err(|e| e.to_string())?;
                let b = profile.get(set, t);
                if f != b {
                    return Ok((false, format!("{set} at T={t}: fast {f}, brute force {b}")));
                }
            }
        }
        Ok((true, format!("all three sets agree for T in 1..={max_t}")))
    };
    CheckOutcome::from_result("oracle_equivalence", run())
}

pub fn check_golden_counts(config: CensusConfig) -> CheckOutcome {
    let run = || -> Result<(bool, String), String> {
        let c = census(10, config)?;
        let get = |set, t| c.count_fast(set, t).map_err(|e| e.to_string());
        let got = [
            get(ClassSetId::All, 1)?,
            get(ClassSetId::All, 2)?,
            get(ClassSetId::SemiStable, 2)?,
            c.count_set_a(10).map_err(|e| e.to_string())?,
            get(ClassSetId::WellRounded, 10)?,
        ];
        let want = [1, 4, 2, 16, 17];
        Ok((
            got == want,
            format!("|B(1)|,|B(2)|,|C(2)|,|A(10)|,N3(10) = {got:?}, expected {want:?}"),
        ))
    };
    CheckOutcome::from_result("golden_counts", run())
}

fn random_unimodular(rng: &mut ChaCha8Rng, len: usize) -> UnimodularMatrix {
    let t_inv = UnimodularMatrix::T.inverse();
    let mut g = UnimodularMatrix::IDENTITY;
    for _ in 0..len {
        let step = match rng.gen_range(0..3) {
            0 => UnimodularMatrix::S,
            1 => UnimodularMatrix::T,
            _ => t_inv,
        };
        g = g * step;
    }
    g
}

/// Gram form of the basis `(p·x + r·y, q·x + s·y)`, scaled by `k`.
fn transform_gram(g: &GramForm, m: &UnimodularMatrix, k: &Rational) -> Result<GramForm, String> {
    let [p, q, r, s] = m.entries().map(|v| Rational::from_integer(BigInt::from(v)));
    let (g11, g12, g22) = g.entries();
    let two = int(2);
    let n11 = &p * &p * g11 + &two * &p * &r * g12 + &r * &r * g22;
    let n12 = &p * &q * g11 + (&p * &s + &q * &r) * g12 + &r * &s * g22;
    let n22 = &q * &q * g11 + &two * &q * &s * g12 + &s * &s * g22;
    GramForm::new(k * n11, k * n12, k * n22).map_err(|e| e.to_string())
}

/// Parametrization against geometry: for every valid quadruple up to
/// `max_height`, the class read off `(a, b, c, d)` matches the predicates of a
/// randomly rebased and rescaled Gram form of `Λ_τ`, whose reduction returns
/// `(a/b, c/d)`.
pub fn check_geometry_consistency(max_height: u64, rng: &mut ChaCha8Rng) -> CheckOutcome {
    let run = |rng: &mut ChaCha8Rng| -> Result<(bool, String), String> {
        let mut checked = 0u64;
        for m in enumerate(ClassSetId::All, max_height).map_err(|e| e.to_string())? {
            let q = m.quadruple();
            let len = rng.gen_range(0..=6);
            let g = random_unimodular(rng, len);
            let k = ratio(rng.gen_range(1..=9), rng.gen_range(1..=9));
            let form = transform_gram(&q.gram(), &g, &k)?;
            let geometric = match (form.is_well_rounded(), form.is_semistable()) {
                (true, _) => ClassKind::WellRounded,
                (false, true) => ClassKind::SemiStableNotWR,
                (false, false) => ClassKind::NotSemiStable,
            };
            if geometric != q.classify() {
                return Ok((false, format!("{q}: classify {} but geometry {geometric}", q.classify())));
            }
            let tau = form.canonical_tau();
            let (a, b, c, d) = q.as_tuple();
            if *tau.re() != ratio(a as i64, b as i64) || *tau.im_sq() != ratio(c as i64, d as i64) {
                return Ok((false, format!("{q}: canonical tau {:?}", tau)));
            }
            checked += 1;
        }
        Ok((true, format!("{checked} quadruples of height <= {max_height}")))
    };
    CheckOutcome::from_result("geometry_consistency", run(rng))
}

pub fn check_height_bounds(max_height: u64, max_pair_height: u64) -> CheckOutcome {
    let run = || -> Result<(bool, String), String> {
        let mut quads = 0u64;
        for m in enumerate(ClassSetId::All, max_height).map_err(|e| e.to_string())? {
            let q = m.quadruple();
            if !q.weil_height_within_ceiling() {
                return Ok((false, format!("{q}: bound {} above ceiling", q.weil_height_bound())));
            }
            quads += 1;
        }
        let mut pairs = 0u64;
        for m in enumerate(ClassSetId::WellRounded, max_pair_height).map_err(|e| e.to_string())? {
            if m.height() == 0 {
                continue;
            }
            let q = m.quadruple();
            let bound = WrPair::new(q.a() as i64, q.b() as i64)
                .map_err(|e| e.to_string())?
                .weil_height_bound();
            if bound > q.b() as f64 {
                return Ok((false, format!("pair ({}, {}): bound {bound}", q.a(), q.b())));
            }
            pairs += 1;
        }
        Ok((
            true,
            format!("{quads} quadruples (height <= {max_height}) and {pairs} pairs (b <= {max_pair_height})"),
        ))
    };
    CheckOutcome::from_result("height_bounds", run())
}

/// `x` truncated (not rounded) to `decimals` places.
fn truncated(x: f64, decimals: usize) -> String {
    let wide = format!("{:.*}", decimals + 4, x);
    wide[..wide.len() - 4].to_owned()
}

pub fn check_main_term_constants() -> CheckOutcome {
    let all = truncated(MainTerms::ALL_CONSTANT, 11);
    let semi = truncated(MainTerms::SEMISTABLE_CONSTANT, 11);
    let ratio = MainTerms::SEMISTABLE_CONSTANT / MainTerms::ALL_CONSTANT;
    let percent = format!("{:.2}", 100.0 * ratio);
    let passed = all == "0.05004666349"
        && semi == "0.00384974334"
        && (ratio - 1.0 / 13.0).abs() < 1e-15
        && percent == "7.69";
    CheckOutcome::new(
        "main_term_constants",
        passed,
        format!(
            "39/(8 pi^4) = {:.13}, 3/(8 pi^4) = {:.13}, ratio = {percent}%",
            MainTerms::ALL_CONSTANT,
            MainTerms::SEMISTABLE_CONSTANT
        ),
    )
}

/// Relative deviations of `N₁`, `N₂` from their main terms must strictly
/// decrease along `heights` and shrink at least like `log T / T` (with
/// slack 1.5) between the second and last height.
pub fn check_asymptotic_convergence(heights: &[u64], config: CensusConfig) -> CheckOutcome {
    let run = || -> Result<(bool, String), String> {
        let max_t = *heights.iter().max().ok_or("no heights")?;
        let c = census(max_t as usize, config)?;
        let reports = c.census_report(heights).map_err(|e| e.to_string())?;
        let devs: [Vec<f64>; 2] = [
            reports.iter().map(|r| r.rel_dev1).collect(),
            reports.iter().map(|r| r.rel_dev2).collect(),
        ];
        let envelope = |t: u64| (t as f64).ln() / t as f64;
        let (lo, hi) = (heights[1], heights[heights.len() - 1]);
        let allowed = envelope(hi) / envelope(lo) * 1.5;
        let mut passed = true;
        let mut detail = Vec::new();
        for (i, d) in devs.iter().enumerate() {
            let decreasing = d.windows(2).all(|w| w[1] < w[0]);
            let ratio = d[d.len() - 1] / d[1];
            passed &= decreasing && ratio <= allowed;
            let list: Vec<String> = d.iter().map(|v| format!("{v:.3e}")).collect();
            detail.push(format!(
                "N{}: dev [{}] decreasing={decreasing} dev({hi})/dev({lo})={ratio:.3} (allowed {allowed:.3})",
                i + 1,
                list.join(", ")
            ));
        }
        Ok((passed, detail.join("; ")))
    };
    CheckOutcome::from_result("asymptotic_convergence", run())
}

fn random_unit_interval_pair(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    loop {
        let q1 = rng.gen_range(1..=1000i64);
        let q2 = rng.gen_range(1..=1000i64);
        let a = ratio(rng.gen_range(0..=q1), q1);
        let b = ratio(rng.gen_range(0..=q2), q2);
        if a < b {
            return (a, b);
        } else if b < a {
            return (b, a);
        }
    }
}

/// `|φ_{α,β}(n) − (β − α)φ(n)| ≤ 2^{ω(n)}` in exact arithmetic.
pub fn check_restricted_totient_bound(max_n: usize, pairs: usize, rng: &mut ChaCha8Rng) -> CheckOutcome {
    let run = |rng: &mut ChaCha8Rng| -> Result<(bool, String), String> {
        let sieve = SieveTables::new(max_n).map_err(|e| e.to_string())?;
        let mut worst = 0.0f64;
        for n in 1..=max_n {
            let phi = Rational::from_integer(BigInt::from(sieve.phi(n)));
            let limit = Rational::from_integer(BigInt::from(1u64 << sieve.omega(n)));
            for _ in 0..pairs {
                let (alpha, beta) = random_unit_interval_pair(rng);
                let count = phi_restricted_with(&sieve, &alpha, &beta, n as u64).map_err(|e| e.to_string())?;
                let dev = (Rational::from_integer(BigInt::from(count)) - (&beta - &alpha) * &phi).abs();
                if dev > limit {
                    return Ok((false, format!("n={n}, alpha={alpha}, beta={beta}: deviation {dev}")));
                }
                worst = worst.max(to_f64(&(dev / &limit)));
            }
        }
        Ok((true, format!("n <= {max_n}, {pairs} pairs each; max deviation/2^omega = {worst:.4}")))
    };
    CheckOutcome::from_result("restricted_totient_bound", run(rng))
}

/// `2^{ω(n)} ≤ d(n)` and `d(n)² ≤ 3n`.
pub fn check_divisor_bounds(max_n: usize) -> CheckOutcome {
    let run = || -> Result<(bool, String), String> {
        let sieve = SieveTables::new(max_n).map_err(|e| e.to_string())?;
        for n in 1..=max_n {
            let d = sieve.divcount(n) as u64;
            if (1u64 << sieve.omega(n)) > d || d * d > 3 * n as u64 {
                return Ok((false, format!("n={n}: d(n)={d}, omega={}", sieve.omega(n))));
            }
        }
        Ok((true, format!("2^omega(n) <= d(n) <= sqrt(3n) for n <= {max_n}")))
    };
    CheckOutcome::from_result("divisor_bounds", run())
}

/// Largest `|S_j(b) − φ(b)b^j/((j+1)2^{j+1})| / (2^{ω(b)} b^j / 2^j)` over
/// `2 ≤ b ≤ max_b`, for `j = 0, 1, 2`.
pub fn power_sum_deviations(sieve: &SieveTables, max_b: u64) -> Result<[(f64, u64); 3], String> {
    let mut out = [(0.0, 0); 3];
    for (j, slot) in out.iter_mut().enumerate() {
        let jj = j as u32;
        let best = (2..=max_b)
            .into_par_iter()
            .map(|b| -> Result<(f64, u64), String> {
                let s = BigInt::from(restricted_power_sum(b, jj).map_err(|e| e.to_string())?);
                let bj = BigInt::from(b).pow(jj);
                let phi = BigInt::from(sieve.phi(b as usize));
                let main = Rational::new(&phi * &bj, BigInt::from((jj as u64 + 1) << (jj + 1)));
                let scale = Rational::new(BigInt::from(1u64 << sieve.omega(b as usize)) * &bj, BigInt::from(1u64 << jj));
                let dev = (Rational::from_integer(s) - main).abs() / scale;
                Ok((to_f64(&dev), b))
            })
            .collect::<Result<Vec<_>, String>>()?
            .into_iter()
            .fold((0.0, 0), |acc, x| if x.0 > acc.0 { x } else { acc });
        *slot = best;
    }
    Ok(out)
}

pub fn check_power_sum_calibration(max_b: u64) -> CheckOutcome {
    let run = || -> Result<(bool, String), String> {
        let sieve = SieveTables::new(max_b as usize).map_err(|e| e.to_string())?;
        let devs = power_sum_deviations(&sieve, max_b)?;
        let passed = devs.iter().all(|&(d, _)| d.is_finite() && d <= POWER_SUM_CONSTANT);
        let parts: Vec<String> = devs
            .iter()
            .enumerate()
            .map(|(j, (d, b))| format!("j={j}: max {d:.6} at b={b}"))
            .collect();
        Ok((passed, format!("{} (asserted <= {POWER_SUM_CONSTANT})", parts.join(", "))))
    };
    CheckOutcome::from_result("power_sum_calibration", run())
}

/// `|Σφ(n)·π²/(3T²) − 1|` strictly decreases over `T = 10², 10³, 10⁴`.
pub fn check_totient_sum_convergence() -> CheckOutcome {
    let run = || -> Result<(bool, String), String> {
        let sieve = SieveTables::new(10_000).map_err(|e| e.to_string())?;
        let devs: Vec<f64> = [100usize, 1000, 10_000]
            .iter()
            .map(|&t| {
                let s = sieve.phi_sum(t).map_err(|e| e.to_string())? as f64;
                Ok((s * PI * PI / (3.0 * (t * t) as f64) - 1.0).abs())
            })
            .collect::<Result<_, String>>()?;
        Ok((
            devs.windows(2).all(|w| w[1] < w[0]),
            format!("deviations {:.3e}, {:.3e}, {:.3e}", devs[0], devs[1], devs[2]),
        ))
    };
    CheckOutcome::from_result("totient_sum_convergence", run())
}

pub fn check_haar() -> CheckOutcome {
    match haar_volumes() {
        Ok(h) => {
            let passed = (h.fraction - 0.04507034144).abs() < 1e-6 && (h.vol_f - PI / 6.0).abs() < 1e-8;
            CheckOutcome::new(
                "haar_volumes",
                passed,
                format!(
                    "fraction = {:.11}, vol_F = {:.12} (pi/6 = {:.12}), vol_semistable = {:.12}",
                    h.fraction,
                    h.vol_f,
                    PI / 6.0,
                    h.vol_semistable
                ),
            )
        }
        Err(e) => CheckOutcome::new("haar_volumes", false, format!("error: {e}")),
    }
}

/// Uniform-ish exact point of `F`: `Re τ = k/m ∈ [0, 1/2]`, `|τ|² ≥ 1`.
pub fn random_point_in_f(rng: &mut ChaCha8Rng) -> UpperHalfPoint {
    let m = rng.gen_range(1..=60i64);
    let re = ratio(rng.gen_range(0..=m / 2), m);
    let v = rng.gen_range(1..=40i64);
    let extra = ratio(rng.gen_range(0..=4 * v), v);
    let im_sq = Rational::one() - &re * &re + extra;
    UpperHalfPoint::new(re, im_sq).expect("positive imaginary part")
}

/// `canonical_tau(Λ_{g·τ}) = τ` for random `τ ∈ F` and words in `S, T, T⁻¹`.
pub fn check_reduction_invariance(samples: usize, max_len: usize, rng: &mut ChaCha8Rng) -> CheckOutcome {
    for _ in 0..samples {
        let tau = random_point_in_f(rng);
        let len = rng.gen_range(0..=max_len);
        let g = random_unimodular(rng, len);
        let moved = g.act(&tau);
        let back = GramForm::of_point(&moved).canonical_tau();
        if back.re() != tau.re() || back.im_sq() != tau.im_sq() {
            return CheckOutcome::new(
                "reduction_invariance",
                false,
                format!("tau = ({}, {}), g = {:?}: got ({}, {})", tau.re(), tau.im_sq(), g.entries(), back.re(), back.im_sq()),
            );
        }
    }
    CheckOutcome::new(
        "reduction_invariance",
        true,
        format!("{samples} random points, words of length <= {max_len}"),
    )
}

pub fn check_j_special_values() -> CheckOutcome {
    let run = || -> Result<(bool, String), String> {
        let i = UpperHalfPoint::new(int(0), int(1)).map_err(|e| e.to_string())?;
        let rho = UpperHalfPoint::new(ratio(1, 2), ratio(3, 4)).map_err(|e| e.to_string())?;
        let ji = j_invariant_exact(&i, 20).map_err(|e| e.to_string())?;
        let jr = j_invariant_exact(&rho, 20).map_err(|e| e.to_string())?;
        let ei = (ji.value - 1728.0).norm();
        let er = jr.value.norm();
        Ok((ei < 1e-9 && er < 1e-9, format!("|j(i) - 1728| = {ei:.2e}, |j(rho)| = {er:.2e}")))
    };
    CheckOutcome::from_result("j_special_values", run())
}

/// Periodicity and inversion on random exact points with `Im τ ∈ [0.9, 3]`.
/// The floating-point path is checked on the same points with a relative
/// tolerance.
pub fn check_j_invariance(samples: usize, rng: &mut ChaCha8Rng) -> CheckOutcome {
    let run = |rng: &mut ChaCha8Rng| -> Result<(bool, String), String> {
        let mut worst_abs = 0.0f64;
        let mut worst_rel = 0.0f64;
        for _ in 0..samples {
            let m = rng.gen_range(1..=100i64);
            let re = ratio(rng.gen_range(-2 * m..=2 * m), m);
            let v = rng.gen_range(1..=100i64);
            let im_sq = ratio(rng.gen_range((81 * v + 99) / 100..=9 * v), v);
            let tau = UpperHalfPoint::new(re, im_sq).map_err(|e| e.to_string())?;
            let j = |p: &UpperHalfPoint| j_invariant_exact(p, 20).map(|v| v.value).map_err(|e| e.to_string());
            let base = j(&tau)?;
            let shifted = j(&UnimodularMatrix::T.act(&tau))?;
            let inverted = j(&UnimodularMatrix::S.act(&tau))?;
            worst_abs = worst_abs.max((shifted - base).norm()).max((inverted - base).norm());

            let (x, y) = (to_f64(tau.re()), tau.im());
            let z = ComplexPoint::new(x, y).to_complex();
            let w = -z.inv();
            let jf = |p: ComplexPoint| j_invariant(&p, 20).map(|v| v.value).map_err(|e| e.to_string());
            let fb = jf(ComplexPoint::new(x, y))?;
            let fs = jf(ComplexPoint::new(x + 1.0, y))?;
            let fi = jf(ComplexPoint::new(w.re, w.im))?;
            let scale = fb.norm().max(1.0);
            worst_rel = worst_rel.max((fs - fb).norm() / scale).max((fi - fb).norm() / scale);
        }
        Ok((
            worst_abs < 1e-8 && worst_rel < 1e-9,
            format!("{samples} points: exact max |dj| = {worst_abs:.2e}, float max relative |dj| = {worst_rel:.2e}"),
        ))
    };
    CheckOutcome::from_result("j_invariance", run(rng))
}

pub fn check_boundary_realness(samples: usize) -> CheckOutcome {
    match boundary_realness_report(samples) {
        Ok(r) => CheckOutcome::new(
            "boundary_realness",
            r.max_boundary_im < 1e-8 && r.min_interior_im > 1e-3,
            format!(
                "max |Im j| over {} boundary points = {:.2e}; min |Im j| over {} interior points = {:.3e}",
                r.boundary_samples, r.max_boundary_im, r.interior_samples, r.min_interior_im
            ),
        ),
        Err(e) => CheckOutcome::new("boundary_realness", false, format!("error: {e}")),
    }
}

/// `j/1728` on the arc `e^{iθ}`, `θ ∈ [π/3, π/2]`, is real in `[0, 1]` up to
/// `10⁻⁶` and strictly increasing in `θ`, from `j(ρ) = 0` to `j(i) = 1`.
pub fn check_arc(samples: usize) -> CheckOutcome {
    let run = || -> Result<(bool, String), String> {
        let tol = 1e-6;
        let mut prev = f64::NEG_INFINITY;
        let mut max_im = 0.0f64;
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for k in 0..samples {
            let theta = PI / 3.0 + (PI / 6.0) * k as f64 / (samples - 1) as f64;
            let v = j_normalized(&ComplexPoint::on_unit_circle(theta), 20)
                .map_err(|e| e.to_string())?
                .value;
            if v.re <= prev {
                return Ok((false, format!("not increasing at theta = {theta}: {} after {prev}", v.re)));
            }
            prev = v.re;
            max_im = max_im.max(v.im.abs());
            lo = lo.min(v.re);
            hi = hi.max(v.re);
        }
        Ok((
            lo >= -tol && hi <= 1.0 + tol && max_im < tol,
            format!("{samples} samples: range [{lo:.3e}, {hi:.12}], max |Im| = {max_im:.2e}, strictly increasing"),
        ))
    };
    CheckOutcome::from_result("wr_arc", run())
}

pub fn check_classify_by_j(max_height: u64) -> CheckOutcome {
    let run = || -> Result<(bool, String), String> {
        let mut n = 0u64;
        for m in enumerate(ClassSetId::All, max_height).map_err(|e| e.to_string())? {
            let q: TauQuadruple = m.quadruple();
            let by_j = classify_by_j(&q, 20).map_err(|e| e.to_string())?;
            if by_j != (q.classify() == ClassKind::WellRounded) {
                return Ok((false, format!("{q}: j verdict {by_j}, class {}", q.classify())));
            }
            n += 1;
        }
        Ok((true, format!("{n} quadruples of height <= {max_height} agree")))
    };
    CheckOutcome::from_result("classify_by_j", run())
}
