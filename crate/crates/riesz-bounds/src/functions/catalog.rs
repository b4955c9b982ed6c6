//! The claim catalog: each entry binds a function, a box, an assertion and
//! the exponent pairs it applies to.

use serde::{Deserialize, Serialize};

use super::*;
use crate::interval::{IBox, Interval, Scalar};

/// Identifier of an evaluable catalog function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FnId {
    Phi,
    BigF,
    BigFPrime,
    StationaryResidual,
    LemmaPoly,
    LemmaPolyPTerm,
    LemmaM,
    CaseF1,
    CaseF2,
    ReverseMainScalar,
    Varphi1,
    Varphi1Second,
    AuxLemma,
    AuxInnerPsi,
    AuxInnerOmega,
    SecantGap,
    SubFirst,
    SubSecond,
    LogForm,
    SharperLogForm,
    TangentGap,
    QuarticPsi,
    Omega1,
    Omega2,
    LemmaG,
    LemmaGSlopeGap,
    LemmaGExcess,
    LemmaGPsi,
    Lemma34,
    Lemma35,
    Lemma35Psi,
}

impl FnId {
    pub const ALL: [FnId; 31] = [
        FnId::Phi,
        FnId::BigF,
        FnId::BigFPrime,
        FnId::StationaryResidual,
        FnId::LemmaPoly,
        FnId::LemmaPolyPTerm,
        FnId::LemmaM,
        FnId::CaseF1,
        FnId::CaseF2,
        FnId::ReverseMainScalar,
        FnId::Varphi1,
        FnId::Varphi1Second,
        FnId::AuxLemma,
        FnId::AuxInnerPsi,
        FnId::AuxInnerOmega,
        FnId::SecantGap,
        FnId::SubFirst,
        FnId::SubSecond,
        FnId::LogForm,
        FnId::SharperLogForm,
        FnId::TangentGap,
        FnId::QuarticPsi,
        FnId::Omega1,
        FnId::Omega2,
        FnId::LemmaG,
        FnId::LemmaGSlopeGap,
        FnId::LemmaGExcess,
        FnId::LemmaGPsi,
        FnId::Lemma34,
        FnId::Lemma35,
        FnId::Lemma35Psi,
    ];

    /// Variable names, in argument order.
    pub fn vars(self) -> &'static [&'static str] {
        use FnId::*;
        match self {
            Phi => &["r", "t"],
            BigF | BigFPrime | StationaryResidual | CaseF1 | CaseF2 | ReverseMainScalar => &["r"],
            LemmaPoly | LemmaPolyPTerm => &["r", "p", "s"],
            LemmaM => &["u"],
            SecantGap | SubFirst | SubSecond => &["p"],
            AuxInnerPsi | AuxInnerOmega | QuarticPsi | LemmaG | LemmaGSlopeGap | LemmaGExcess | LemmaGPsi
            | Lemma35Psi => &["t"],
            Varphi1 | Varphi1Second | AuxLemma | LogForm | SharperLogForm | TangentGap | Omega1 | Omega2
            | Lemma34 | Lemma35 => &["s"],
        }
    }

    pub fn arity(self) -> usize {
        self.vars().len()
    }

    /// Whether the function reads the exponent pair.
    pub fn uses_params(self) -> bool {
        use FnId::*;
        matches!(self, Phi | BigF | BigFPrime | StationaryResidual | CaseF1 | CaseF2 | ReverseMainScalar)
    }

    pub fn name(self) -> &'static str {
        use FnId::*;
        match self {
            Phi => "phi",
            BigF => "big_f",
            BigFPrime => "big_f_prime",
            StationaryResidual => "stationary_residual",
            LemmaPoly => "lemma_poly",
            LemmaPolyPTerm => "lemma_poly_p_term",
            LemmaM => "lemma_m",
            CaseF1 => "case_f1",
            CaseF2 => "case_f2",
            ReverseMainScalar => "reverse_main_scalar",
            Varphi1 => "varphi1",
            Varphi1Second => "varphi1_second",
            AuxLemma => "aux_lemma_fn",
            AuxInnerPsi => "aux_inner_psi",
            AuxInnerOmega => "aux_inner_omega",
            SecantGap => "secant_gap",
            SubFirst => "sub_first",
            SubSecond => "sub_second",
            LogForm => "log_form",
            SharperLogForm => "sharper_log_form",
            TangentGap => "tangent_gap",
            QuarticPsi => "quartic_psi",
            Omega1 => "omega1",
            Omega2 => "omega2",
            LemmaG => "lemma_g",
            LemmaGSlopeGap => "lemma_g_slope_gap",
            LemmaGExcess => "lemma_g_excess",
            LemmaGPsi => "lemma_g_psi",
            Lemma34 => "lemma34_fn",
            Lemma35 => "lemma35_fn",
            Lemma35Psi => "lemma35_psi",
        }
    }

    pub fn from_name(name: &str) -> Option<FnId> {
        FnId::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Evaluates the function at `x` (length [`arity`](Self::arity)).
    pub fn eval<T: Scalar>(self, x: &[T], pr: &Params<T>) -> T {
        use FnId::*;
        debug_assert_eq!(x.len(), self.arity());
        match self {
            Phi => phi(x[0], x[1], pr),
            BigF => big_f(x[0], pr),
            BigFPrime => big_f_prime(x[0], pr),
            StationaryResidual => stationary_residual(x[0], pr),
            LemmaPoly => lemma_poly(x[0], x[1], x[2]),
            LemmaPolyPTerm => lemma_poly_p_term(x[0], x[1], x[2]),
            LemmaM => lemma_m(x[0]),
            CaseF1 => case_f1(x[0], pr),
            CaseF2 => case_f2(x[0], pr),
            ReverseMainScalar => reverse_main_scalar(x[0], pr),
            Varphi1 => varphi1(x[0]),
            Varphi1Second => varphi1_second(x[0]),
            AuxLemma => aux_lemma_fn(x[0]),
            AuxInnerPsi => aux_inner_psi(x[0]),
            AuxInnerOmega => aux_inner_omega(x[0]),
            SecantGap => secant_gap(x[0]),
            SubFirst => sub_first(x[0]),
            SubSecond => sub_second(x[0]),
            LogForm => log_form(x[0]),
            SharperLogForm => sharper_log_form(x[0]),
            TangentGap => tangent_gap(x[0]),
            QuarticPsi => quartic_psi(x[0]),
            Omega1 => omega1(x[0]),
            Omega2 => omega2(x[0]),
            LemmaG => lemma_g(x[0]),
            LemmaGSlopeGap => lemma_g_slope_gap(x[0]),
            LemmaGExcess => lemma_g_excess(x[0]),
            LemmaGPsi => lemma_g_psi(x[0]),
            Lemma34 => lemma34_fn(x[0]),
            Lemma35 => lemma35_fn(x[0]),
            Lemma35Psi => lemma35_psi(x[0]),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Assertion {
    Nonnegative,
    Nonpositive,
    Increasing,
    Decreasing,
    Convex,
    Concave,
}

impl Assertion {
    /// Order of the derivative whose sign carries the assertion.
    pub fn derivative_order(self) -> u32 {
        match self {
            Assertion::Nonnegative | Assertion::Nonpositive => 0,
            Assertion::Increasing | Assertion::Decreasing => 1,
            Assertion::Convex | Assertion::Concave => 2,
        }
    }

    /// The sign assertion on that derivative. Monotonicity and convexity are
    /// weak: increasing means `f' >= 0`.
    pub fn lowered(self) -> Assertion {
        match self {
            Assertion::Nonnegative | Assertion::Increasing | Assertion::Convex => Assertion::Nonnegative,
            _ => Assertion::Nonpositive,
        }
    }

    /// `+1` for nonnegativity, `-1` for nonpositivity of the lowered function.
    pub fn sign(self) -> f64 {
        if self.lowered() == Assertion::Nonnegative {
            1.0
        } else {
            -1.0
        }
    }
}

/// Which exponent pairs a claim is instantiated at.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamRule {
    /// The function takes no exponents.
    None,
    /// Conjugate pairs with `p` in (4/3, 2).
    ForwardConjugate,
    /// Conjugate pairs with `p` in (2, 4).
    ReverseConjugate,
    /// A single pair, independent of any grid.
    Fixed { p: f64, s: f64 },
}

impl ParamRule {
    pub fn accepts(&self, pair: &ExponentPair) -> bool {
        match self {
            ParamRule::None | ParamRule::Fixed { .. } => false,
            ParamRule::ForwardConjugate => pair.is_conjugate() && pair.forward_range(),
            ParamRule::ReverseConjugate => pair.is_conjugate() && pair.reverse_range(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lo,
    Hi,
}

/// An exact fact at the boundary that plain sign certification cannot see.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryRule {
    /// The certified function and its first `order - 1` derivatives in `var`
    /// vanish on the face `var = at`, where `at = n/d` exactly. The sign is
    /// then carried by the `order`-th derivative on a slab next to the face.
    FaceZero { var: usize, side: Side, at: (i64, i64), order: u32, fact: &'static str },
    /// The function and its gradient vanish at an isolated point (given as an
    /// enclosure, depending on the pair); a neighbourhood is excluded by
    /// proving the Hessian positive definite there.
    Touch {
        #[serde(skip)]
        point: fn(&ExponentPair) -> Vec<Interval>,
        fact: &'static str,
    },
}

/// How a claim is certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Plan {
    /// Branch and bound on the (lowered) function itself.
    Direct,
    /// Split `lemma_poly = (p - 2) A - 4a r^(2+a) H(a, r)`: certify the
    /// `(p - 2) A` term on the box and `m(u) >= 0` on [0, 1], which fixes the
    /// sign of `H` on either side of `a = 1`.
    LemmaPolySplit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Proved,
    Refuted,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: &'static str,
    pub fn_id: FnId,
    pub variables: &'static [&'static str],
    pub domain: IBox,
    pub assertion: Assertion,
    pub params: ParamRule,
    pub citation: &'static str,
    pub expected: Expected,
    pub plan: Plan,
    /// Rules for the lowered function (the derivative for derived assertions).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub boundary: Vec<BoundaryRule>,
}

impl Claim {
    fn new(
        id: &'static str,
        fn_id: FnId,
        domain: Vec<Interval>,
        assertion: Assertion,
        params: ParamRule,
        citation: &'static str,
    ) -> Self {
        assert_eq!(domain.len(), fn_id.arity(), "{id}: domain dimension");
        Claim {
            id,
            fn_id,
            variables: fn_id.vars(),
            domain: IBox::new(domain),
            assertion,
            params,
            citation,
            expected: Expected::Proved,
            plan: Plan::Direct,
            boundary: Vec::new(),
        }
    }

    fn rule(mut self, rule: BoundaryRule) -> Self {
        self.boundary.push(rule);
        self
    }

    fn plan(mut self, plan: Plan) -> Self {
        self.plan = plan;
        self
    }

    fn expect(mut self, expected: Expected) -> Self {
        self.expected = expected;
        self
    }

    /// Instances of this claim for a grid of pairs. Claims without exponents
    /// give one instance; fixed-pair claims ignore the grid.
    pub fn instances(&self, grid: &[ExponentPair]) -> Vec<ClaimInstance> {
        match self.params {
            ParamRule::None => vec![ClaimInstance { claim: self.clone(), pair: None }],
            ParamRule::Fixed { p, s } => {
                vec![ClaimInstance { claim: self.clone(), pair: Some(ExponentPair { p, s, conjugate: false }) }]
            }
            _ => grid
                .iter()
                .filter(|g| self.params.accepts(g))
                .map(|g| ClaimInstance { claim: self.clone(), pair: Some(*g) })
                .collect(),
        }
    }
}

/// A claim bound to a concrete pair (or to none).
#[derive(Clone, Debug)]
pub struct ClaimInstance {
    pub claim: Claim,
    pub pair: Option<ExponentPair>,
}

impl ClaimInstance {
    pub fn params<T: Scalar>(&self) -> Params<T> {
        match &self.pair {
            Some(pair) => pair.scalars(),
            None => Params::none(),
        }
    }
}

fn iv(lo: f64, hi: f64) -> Interval {
    Interval::new(lo, hi).expect("catalog bounds")
}

/// `[a/b, c/d]`, rounded outward.
fn rat(a: i64, b: i64, c: i64, d: i64) -> Interval {
    iv(Interval::ratio(a, b).lo(), Interval::ratio(c, d).hi())
}

fn face(var: usize, side: Side, at: (i64, i64), order: u32, fact: &'static str) -> BoundaryRule {
    BoundaryRule::FaceZero { var, side, at, order, fact }
}

fn phi_touch(pair: &ExponentPair) -> Vec<Interval> {
    vec![Interval::point(1.0), Interval::pi() / Interval::point(pair.p)]
}

/// The fixed claim catalog, in report order.
pub fn claim_catalog() -> Vec<Claim> {
    use Assertion::*;
    use FnId as F;
    use ParamRule::{ForwardConjugate as Fwd, None as NoPar, ReverseConjugate as Rev};
    use Side::{Hi, Lo};

    let pi = Interval::pi().hi();
    let two_43 = Interval::point(2.0).pow(Interval::ratio(4, 3)).lo();
    vec![
        Claim::new("C1", F::Phi, vec![iv(0.0, 1.0), iv(0.0, pi)], Nonnegative, Fwd,
            "Phi(r,t) >= 0 for 0 <= r <= 1, -pi <= t <= pi, conjugate p in (4/3,2); Phi is even in t, so t in [0,pi] covers the rectangle")
            .rule(BoundaryRule::Touch { point: phi_touch,
                fact: "Phi(1, pi/p) = 0: the middle term equals 1 and cos(pi/2) = 0; grad Phi vanishes there" }),
        Claim::new("C1.demo", F::Phi, vec![iv(0.0, 1.0), iv(0.0, pi)], Nonnegative,
            ParamRule::Fixed { p: 1.5, s: 4.0 },
            "the inequality does not hold for r = 1/2, t = pi/2, p = 3/2, s = 4")
            .expect(Expected::Refuted),
        Claim::new("C2", F::BigF, vec![iv(0.0, 1.0)], Nonnegative, Fwd,
            "F(r) = -((1+r^s)/(2(1+r)^s))^(p/s) + 1/(2^p cos^p(pi/2p)) - (sqrt r/(1+r))^p tan(pi/2p) >= 0"),
        Claim::new("C3a", F::LemmaPoly, vec![iv(0.0, 1.0), rat(4, 3, 2, 1), iv(2.0, 4.0)], Nonpositive, NoPar,
            "p(1-r)(r^s-1)(r^s-r) + 2sr(r^(s-1)-r^(s+1)) + 2r(r^(2s)-1) <= 0, p in [4/3,2], s in [2,4]")
            .plan(Plan::LemmaPolySplit),
        Claim::new("C3b", F::LemmaPoly, vec![iv(0.0, 1.0), iv(2.0, 4.0), rat(4, 3, 2, 1)], Nonnegative, NoPar,
            "p(1-r)(r^s-1)(r^s-r) + 2sr(r^(s-1)-r^(s+1)) + 2r(r^(2s)-1) >= 0, p in [2,4], s in [4/3,2]")
            .plan(Plan::LemmaPolySplit),
        Claim::new("C4", F::Varphi1, vec![iv(2.0, 4.0)], Nonnegative, NoPar,
            "key form phi1(s) = -(s-1)log(2^s-1) + (s-2)log(2^s+1) - s log(2 sin(pi/2s)) + log 6 >= 0 on [2,4]")
            .rule(face(0, Lo, (2, 1), 1, "phi1(2) = -log 3 - 2 log(sqrt 2) + log 6 = 0")),
        Claim::new("C5", F::Varphi1, vec![rat(4, 3, 2, 1)], Nonpositive, NoPar,
            "reverse branch phi1(s) <= 0 on [4/3,2]")
            .rule(face(0, Hi, (2, 1), 1, "phi1(2) = 0")),
        Claim::new("C6.neg", F::AuxLemma, vec![iv(2.0, 4.0)], Nonpositive, NoPar,
            "pi csc(pi/s)(s(pi csc(pi/s) - 4) - pi(s-2)cot(pi/s))/s is negative on [2,4]"),
        Claim::new("C6.dec", F::AuxLemma, vec![iv(2.0, 4.0)], Decreasing, NoPar,
            "pi csc(pi/s)(s(pi csc(pi/s) - 4) - pi(s-2)cot(pi/s))/s is decreasing on [2,4]")
            .rule(face(0, Lo, (2, 1), 1,
                "the derivative vanishes at s = 2: every term carries cos(pi/2) or (s-2) times a smooth factor, and the remaining terms cancel")),
        Claim::new("C7", F::SecantGap, vec![rat(4, 3, 2, 1)], Nonnegative, NoPar,
            "(2^s-1)/(2^s-2) <= 9p/14 + 3/14 with s = p/(p-1), p in [4/3,2]")
            .rule(face(0, Lo, (4, 3), 1, "at p = 4/3, s = 4: 15/14 = 12/14 + 3/14"))
            .rule(face(0, Hi, (2, 1), 1, "at p = 2, s = 2: 3/2 = 18/14 + 3/14")),
        Claim::new("C8a", F::SubFirst, vec![rat(5, 3, 2, 1)], Nonnegative, NoPar,
            "1/(2^p cos^p(pi/2p)) - tan(pi/2p) (2^s-1)/(2^s-2) 2^((p-2)/2)/3^(p-1) >= 0 for p in [5/3,2]")
            .rule(face(0, Hi, (2, 1), 1, "at p = 2: 1/2 - 1 * 3/2 * 1/3 = 0")),
        Claim::new("C8b", F::SubSecond, vec![rat(4, 3, 5, 3)], Nonnegative, NoPar,
            "1/(2^p cos^p(pi/2p)) - tan(pi/2p)(9p/14 + 3/14) 2^((p-2)/2)/3^(p-1) >= 0 for p in [4/3,5/3]"),
        Claim::new("C9a", F::Varphi1, vec![iv(2.0, 4.0)], Convex, NoPar,
            "the key form phi1 is convex on [2,4]"),
        Claim::new("C9b", F::Varphi1, vec![rat(4, 3, 2, 1)], Convex, NoPar,
            "phi1 is convex on [4/3,2] (reverse branch)"),
        Claim::new("C10", F::ReverseMainScalar, vec![iv(0.0, 1.0)], Nonpositive, Rev,
            "(1+r)^p/(2^p cos^p(pi/2p)) - ((1+r^s)/2)^(p/s) - r^(p/2) tan(pi/2p) <= 0, conjugate p in (2,4)"),
        Claim::new("C11a", F::CaseF1, vec![iv(0.0, 0.5)], Nonpositive, Rev,
            "reverse F1(r) <= 0 for 0 <= r <= 1/2"),
        Claim::new("C11b", F::CaseF2, vec![iv(0.5, 1.0)], Nonpositive, Rev,
            "reverse F2(r) <= 0 for 1/2 <= r <= 1"),
        Claim::new("C12a", F::CaseF1, vec![iv(0.0, 0.5)], Nonnegative, Fwd,
            "forward case r <= 1/2: F1(r) >= 0"),
        Claim::new("C12b", F::CaseF1, vec![iv(0.0, 0.5)], Decreasing, Fwd,
            "forward F1 is decreasing in r on [0,1/2]"),
        Claim::new("C12c", F::CaseF2, vec![iv(0.5, 1.0)], Nonnegative, Fwd,
            "forward case r >= 1/2: F2(r) >= 0"),
        Claim::new("C12d", F::CaseF2, vec![iv(0.5, 1.0)], Increasing, Fwd,
            "forward F2 is increasing in r on [1/2,1]")
            .rule(face(0, Hi, (1, 1), 1,
                "F2'(1) = 0: F2' is r^(p/2-1) tan(pi/2p) L(r,p,s) / (4(r-r^s)^2(1+r)^p) and L has a triple zero at r = 1")),
        Claim::new("C13.inc", F::LemmaG, vec![iv(2.5, 4.0)], Increasing, NoPar,
            "g(t) = (t^2(4+log 8) - 2t^2 log t + log(8/t^2) - t log 4 - 4)/(t-1) is increasing, g' >= 0 on [5/2,4]"),
        Claim::new("C13.slope", F::LemmaGSlopeGap, vec![iv(2.5, 4.0)], Increasing, NoPar,
            "g'(t) <= 1 on [5/2,4], i.e. t - g(t) is increasing"),
        Claim::new("C13.start", F::LemmaGExcess, vec![iv(2.5, 2.5)], Nonnegative, NoPar,
            "g(5/2) >= 25/2"),
        Claim::new("C14", F::Omega2, vec![rat(4, 3, 2, 1)], Increasing, NoPar,
            "omega2, the exponential part of s(2^s+1) phi1''(s), is increasing for s in [4/3,2]"),
        Claim::new("C15", F::Lemma34, vec![rat(4, 3, 2, 1)], Concave, NoPar,
            "-2s log(2 sin(pi/2s)) - 2(s-1) log cot(pi/2s) is concave on [4/3,2]"),
        Claim::new("C16", F::Lemma35, vec![rat(4, 3, 2, 1)], Convex, NoPar,
            "-2(s-1) log((2^s-1)/(2^s-2)) is convex for s in [4/3,2]"),
        Claim::new("C16.psi", F::Lemma35Psi, vec![iv(two_43, 4.0)], Nonpositive, NoPar,
            "psi(t) = t^2 log(t/2) - 2t(t-3) - 2 log t - 4 + log 4 <= 0 on [2^(4/3),4]"),
        Claim::new("C17", F::LogForm, vec![rat(4, 3, 2, 1)], Nonpositive, NoPar,
            "reverse log form of F2(1/2) <= 0 on [4/3,2] (with the factor 2 inside the sine logarithm)")
            .rule(face(0, Hi, (2, 1), 1, "at s = 2: -2 log 2 + log(9/4) - 4 log(1/sqrt 2) - 0 - 2 log(3/2) = 0")),
        Claim::new("C18", F::LogForm, vec![rat(2, 1, 5, 2)], Nonnegative, NoPar,
            "log form of the first subinequality >= 0 on [2,5/2]")
            .rule(face(0, Lo, (2, 1), 1, "the log form vanishes at s = 2")),
        Claim::new("C19", F::SharperLogForm, vec![rat(5, 2, 4, 1)], Nonnegative, NoPar,
            "sharper log form with (12s-3)/(14(s-1)) >= 0 on [5/2,4]"),
        Claim::new("C20", F::TangentGap, vec![rat(2, 1, 5, 2)], Nonnegative, NoPar,
            "-2(s-1) log((2^s-1)/(2^s-2)) >= -log(9/4) + log(8 2^(1/3)/9)(s-2) on [2,5/2]")
            .rule(face(0, Lo, (2, 1), 2,
                "tangent line at s = 2: value -2 log(3/2) = -log(9/4) and slope log(8 2^(1/3)/9) match")),
        Claim::new("C21", F::QuarticPsi, vec![iv(4.0, 16.0)], Nonpositive, NoPar,
            "psi(t) = -2t^4 + t^3 log 4 - 4t^2 log 8 + 8t^2 log t + t log 4 + 2 <= 0 on [4,16]"),
        Claim::new("C22", F::AuxInnerOmega, vec![rat(1, 4, 1, 2)], Nonnegative, NoPar,
            "omega(t) = -2 pi t + sin(2 pi t) - pi cos(pi t) + pi >= 0 on [1/4,1/2]")
            .rule(face(0, Hi, (1, 2), 1, "omega(1/2) = -pi + sin(pi) - pi cos(pi/2) + pi = 0")),
        Claim::new("C23", F::AuxInnerPsi, vec![rat(1, 4, 1, 2)], Nonnegative, NoPar,
            "psi(t) = -(pi(2t-1)cot(pi t) + pi csc(pi t) - 4) >= 0 on [1/4,1/2]"),
    ]
}

pub fn find_claim(id: &str) -> Option<Claim> {
    claim_catalog().into_iter().find(|c| c.id == id)
}
