//! Seeded verification suites. Every trial draws its inputs from a seed
//! derived from `(master seed, suite, trial index)`, so the certificate list
//! is identical however the trials are scheduled.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    certify_concavity_channel, certify_concavity_state, certify_depolarizing_f,
    certify_lindblad_extension, certify_minkowski, certify_prop1, certify_prop3, certify_prop4,
    certify_subadditivity, certify_subsystem_bound, compare_map_bounds, depolarizing_f,
    ky_fan_premise, omega_extension, q_average_output_entropy, InequalityCertificate, Seed,
};
use crate::channels::{bloch_state, depolarizing, BlochVector, QuantumChannel};
use crate::entropies::{
    quantum_q_entropy, unified_from_tsallis, DensityMatrix, EntropyParams, QParam,
};
use crate::error::{Error, Result};
use crate::exchange::{
    entanglement_fidelity, entanglement_fidelity_of, entropy_exchange, exchange_matrix,
    final_joint_state, map_entropy, purify,
};
use crate::kernel::{
    birkhoff_decompose, birkhoff_reconstruction_error, check_majorization, hermitian_eig,
    hermitian_eigenvalues, partial_trace, CMatrix, Subsystem,
};
use crate::random::{
    derive_seed, random_channel, random_density, random_doubly_stochastic, random_positive,
    random_unitary,
};

pub const PROP1_Q: [f64; 4] = [1.0, 1.5, 2.0, 3.0];
pub const DEPOLARIZING_Q: [f64; 5] = [0.5, 1.0, 1.5, 2.0, 3.0];
pub const PROP2_PARAMS: [(f64, f64); 6] = [
    (0.5, 1.0),
    (0.5, -1.0),
    (1.0, 1.0),
    (2.0, 0.5),
    (2.0, 1.0),
    (3.0, 2.0),
];
pub const PROP2_THETA: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
pub const PROP3_Q: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
pub const PROP3_S: [f64; 5] = [-1.0, 0.0, 0.5, 1.0, 2.0];
pub const PROP4_Q: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
pub const PROP4_S: [f64; 4] = [0.0, 0.5, 1.0, 2.0];
pub const LINDBLAD_PARAMS: [(f64, f64); 3] = [(2.0, 0.5), (2.0, 1.0), (3.0, 1.0)];
pub const MINKOWSKI_Q: [f64; 7] = [-1.0, 0.25, 0.5, 0.75, 1.0, 2.0, 3.0];
pub const SUBADDITIVITY_Q: [f64; 4] = [1.0, 1.5, 2.0, 3.0];

/// Tolerance for identities between two computed quantities.
pub const IDENTITY_TOL: f64 = 1e-9;
/// Tolerance for closed-form values.
pub const EXACT_TOL: f64 = 1e-12;
/// Tolerance for the Choi → Kraus → Choi round trip.
pub const ROUND_TRIP_TOL: f64 = 1e-8;
/// Tolerance for Birkhoff reconstructions.
pub const BIRKHOFF_TOL: f64 = 1e-8;

const BIRKHOFF_DIM: usize = 4;
const MINKOWSKI_DIM: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Prop1,
    Depolarizing,
    Prop2,
    Prop3,
    Prop4,
    Lindblad,
    Minkowski,
    Kernel,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Prop1,
        Suite::Depolarizing,
        Suite::Prop2,
        Suite::Prop3,
        Suite::Prop4,
        Suite::Lindblad,
        Suite::Minkowski,
        Suite::Kernel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop1 => "prop1",
            Suite::Depolarizing => "depolarizing",
            Suite::Prop2 => "prop2",
            Suite::Prop3 => "prop3",
            Suite::Prop4 => "prop4",
            Suite::Lindblad => "lindblad",
            Suite::Minkowski => "minkowski",
            Suite::Kernel => "kernel",
        }
    }

    fn salt(self) -> u64 {
        0x5EED_0000 + self as u64
    }

    /// Seed of trial `index` under `master`.
    pub fn trial_seed(self, master: u64, index: usize) -> u64 {
        derive_seed(derive_seed(master, self.salt()), index as u64)
    }

    pub fn run(self, master: u64, trials: usize) -> Result<SuiteReport> {
        let mut certificates = constructed(self)?;
        let per_trial: Vec<Vec<InequalityCertificate>> = (0..trials)
            .into_par_iter()
            .map(|index| {
                let seed = self.trial_seed(master, index);
                let certs = trial(self, index, seed)?;
                Ok(certs
                    .into_iter()
                    .map(|c| c.with_seed(Seed::Value(seed)))
                    .collect())
            })
            .collect::<Result<_>>()?;
        certificates.extend(per_trial.into_iter().flatten());
        Ok(SuiteReport {
            suite: self,
            trials,
            certificates,
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub trials: usize,
    pub certificates: Vec<InequalityCertificate>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.certificates.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &InequalityCertificate> {
        self.certificates.iter().filter(|c| !c.holds)
    }

    pub fn named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a InequalityCertificate> {
        self.certificates.iter().filter(move |c| c.name == name)
    }
}

/// Runs every suite in order.
pub fn run_all(master: u64, trials: usize) -> Result<Vec<SuiteReport>> {
    Suite::ALL
        .into_iter()
        .map(|s| s.run(master, trials))
        .collect()
}

/// Dimension and Kraus count cycled over trial indices: `d ∈ {2, 3}`,
/// `n ∈ {2, 3, 4}`.
pub fn trial_shape(index: usize) -> (usize, usize) {
    (2 + index % 2, 2 + (index / 2) % 3)
}

fn params(q: f64, s: f64) -> Result<EntropyParams> {
    EntropyParams::new(q, s)
}

fn describe(d: usize, n: usize) -> String {
    format!("random_channel(d={d}, kraus={n})")
}

/// Largest gap between two non-increasing spectra, padding the shorter one
/// with zeros.
pub fn spectrum_gap(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| (a.get(k).copied().unwrap_or(0.0) - b.get(k).copied().unwrap_or(0.0)).abs())
        .fold(0.0, f64::max)
}

/// Certificate that a numerical gap is at most `tolerance`.
fn gap(name: &str, value: f64, tolerance: f64) -> Result<InequalityCertificate> {
    InequalityCertificate::new(name, value, 0.0, tolerance)
}

fn flag(name: &str, ok: bool) -> Result<InequalityCertificate> {
    InequalityCertificate::new(name, if ok { 0.0 } else { 1.0 }, 0.0, 0.0)
}

fn constructed(suite: Suite) -> Result<Vec<InequalityCertificate>> {
    let mut out = Vec::new();
    match suite {
        Suite::Prop1 => {
            let rho = bloch_state(BlochVector::new(0.0, 0.3, 0.4))?;
            let cert = certify_prop1(&depolarizing(0.5)?, &rho, 2.0)?;
            out.push(InequalityCertificate::equality(
                "prop1_depolarizing_value",
                cert.lhs,
                0.125,
                EXACT_TOL,
            )?);
            out.push(cert.with_descriptor("depolarizing(p=0.5), |s|=0.5"));
            let id = certify_prop1(&QuantumChannel::identity(2), &rho, 2.0)?;
            out.push(InequalityCertificate::equality(
                "prop1_identity_equality",
                id.lhs,
                id.rhs,
                EXACT_TOL,
            )?);
        }
        Suite::Depolarizing => {
            for q in DEPOLARIZING_Q {
                out.extend(certify_depolarizing_f(q)?);
            }
        }
        Suite::Prop2 => {}
        Suite::Prop3 => {
            let ch = depolarizing(0.3)?;
            let rho = DensityMatrix::completely_mixed(2)?;
            let p = params(2.0, 1.0)?;
            for cert in certify_prop3(&ch, &rho, p)? {
                out.push(
                    InequalityCertificate::equality(
                        "prop3_depolarizing_tight",
                        cert.lhs,
                        cert.rhs,
                        EXACT_TOL,
                    )?
                    .with_entropy_params(p),
                );
                out.push(cert.with_descriptor("depolarizing(p=0.3), maximally mixed input"));
            }
            for q in PROP3_Q {
                for s in PROP3_S {
                    out.push(monotone_map_check(params(q, s)?)?);
                }
            }
        }
        Suite::Prop4 => {
            let cmp = compare_map_bounds(&depolarizing(0.3)?, params(2.0, 1.0)?)?;
            out.push(InequalityCertificate::equality(
                "prop4_depolarizing_new",
                cmp.new_bound,
                0.75,
                EXACT_TOL,
            )?);
            out.push(InequalityCertificate::equality(
                "prop4_depolarizing_old",
                cmp.old_bound,
                1.0,
                EXACT_TOL,
            )?);
            out.push(cmp.certificate.with_descriptor("depolarizing(p=0.3)"));
            let id = certify_prop4(&QuantumChannel::identity(2), params(2.0, 1.0)?)?;
            out.push(id.with_descriptor("identity(2)"));
        }
        Suite::Lindblad => {
            let rho = bloch_state(BlochVector::new(0.1, -0.3, 0.5))?;
            for (q, s) in LINDBLAD_PARAMS {
                for cert in
                    certify_lindblad_extension(&QuantumChannel::identity(2), &rho, params(q, s)?)?
                {
                    out.push(cert.with_descriptor("identity(2)"));
                }
            }
        }
        Suite::Minkowski => {
            let i = CMatrix::identity(2);
            out.push(certify_minkowski(&i, &i, 0.5)?.with_descriptor("A = Z = I"));
            out.push(certify_minkowski(&i, &i, 1.0)?.with_descriptor("A = Z = I"));
        }
        Suite::Kernel => {
            let s = crate::kernel::DoublyStochastic::new(vec![vec![0.3, 0.7], vec![0.7, 0.3]])?;
            let terms = birkhoff_decompose(&s)?;
            out.push(gap(
                "birkhoff_reconstruction",
                birkhoff_reconstruction_error(&s, &terms),
                BIRKHOFF_TOL,
            )?);
            out.push(InequalityCertificate::new(
                "birkhoff_term_count",
                terms.len() as f64,
                2.0,
                0.0,
            )?);
        }
    }
    Ok(out)
}

/// Checks that `x ↦ [(1+(1−q)x)^s − 1]/((1−q)s)` is nondecreasing on a grid
/// inside its domain; the certificate records the largest decrease.
fn monotone_map_check(p: EntropyParams) -> Result<InequalityCertificate> {
    let upper = match p.q {
        QParam::Value(q) if q > 1.0 => 0.999 / (q - 1.0),
        _ => 5.0,
    };
    let values: Vec<f64> = (0..=200)
        .map(|k| unified_from_tsallis(upper * k as f64 / 200.0, p))
        .collect::<Result<_>>()?;
    let worst = values.windows(2).map(|w| w[0] - w[1]).fold(0.0, f64::max);
    Ok(gap("prop3_monotone_map", worst, 0.0)?.with_entropy_params(p))
}

fn trial(suite: Suite, index: usize, seed: u64) -> Result<Vec<InequalityCertificate>> {
    let (d, n) = trial_shape(index);
    let sub = |k: u64| derive_seed(seed, k);
    let desc = describe(d, n);
    let mut out = Vec::new();
    match suite {
        Suite::Prop1 => {
            let ch = random_channel(d, d, n, sub(0))?;
            let rho = random_density(d, sub(1))?;
            let omega = omega_extension(&ch, &rho)?;
            for q in PROP1_Q {
                out.push(certify_prop1(&ch, &rho, q)?.with_descriptor(desc.clone()));
                let chain = InequalityCertificate::equality(
                    "prop1_omega_chain",
                    omega.conditional_entropy(q)?,
                    q_average_output_entropy(&ch, &rho, q)?,
                    IDENTITY_TOL,
                )?;
                out.push(chain.with_param("q", q).with_descriptor(desc.clone()));
            }
        }
        Suite::Depolarizing => {
            let p = ((index % 100) + 1) as f64 / 100.0;
            let ch = depolarizing(p)?;
            let rho = random_density(2, sub(0))?;
            let desc = format!("depolarizing(p={p}), random qubit state");
            for q in DEPOLARIZING_Q {
                let qp = QParam::new(q)?;
                let avg = q_average_output_entropy(&ch, &rho, q)?;
                let input = quantum_q_entropy(&rho, qp)?;
                out.push(
                    InequalityCertificate::equality(
                        "depolarizing_ratio",
                        avg,
                        depolarizing_f(q, p)? * input,
                        IDENTITY_TOL,
                    )?
                    .with_param("q", q)
                    .with_param("p", p)
                    .with_descriptor(desc.clone()),
                );
                if q < 1.0 {
                    out.push(
                        InequalityCertificate::strict(
                            "depolarizing_expected_violation",
                            input,
                            avg,
                        )?
                        .with_param("q", q)
                        .with_param("p", p)
                        .with_descriptor(desc.clone()),
                    );
                }
            }
        }
        Suite::Prop2 => {
            let phi = random_channel(d, d, n, sub(0))?;
            let psi = random_channel(d, d, 2 + (index / 6) % 3, sub(1))?;
            let rho = random_density(d, sub(2))?;
            let ups = random_density(d, sub(3))?;
            for (q, s) in PROP2_PARAMS {
                let p = params(q, s)?;
                for theta in PROP2_THETA {
                    out.push(
                        certify_concavity_state(&phi, &rho, &ups, theta, p)?
                            .with_descriptor(desc.clone()),
                    );
                    out.push(
                        certify_concavity_channel(&phi, &psi, &rho, theta, p)?
                            .with_descriptor(desc.clone()),
                    );
                }
            }
        }
        Suite::Prop3 => {
            let ch = random_channel(d, d, n, sub(0))?;
            let rho = random_density(d, sub(1))?;
            for q in PROP3_Q {
                for s in PROP3_S {
                    for cert in certify_prop3(&ch, &rho, params(q, s)?)? {
                        out.push(cert.with_descriptor(desc.clone()));
                    }
                }
            }
        }
        Suite::Prop4 => {
            let ch = random_channel(d, d, n, sub(0))?;
            let rho = random_density(d, sub(1))?;
            for q in PROP4_Q {
                for s in PROP4_S {
                    let p = params(q, s)?;
                    out.push(certify_prop4(&ch, p)?.with_descriptor(desc.clone()));
                    out.push(certify_subsystem_bound(&ch, &rho, p)?.with_descriptor(desc.clone()));
                    if q > 1.0 && s >= 1.0 / q {
                        out.push(
                            compare_map_bounds(&ch, p)?
                                .certificate
                                .with_descriptor(desc.clone()),
                        );
                    }
                }
            }
        }
        Suite::Lindblad => {
            let ch = random_channel(d, d, n, sub(0))?;
            let rho = random_density(d, sub(1))?;
            let unitary = QuantumChannel::unitary(random_unitary(d, sub(2))?)?;
            for (q, s) in LINDBLAD_PARAMS {
                let p = params(q, s)?;
                for cert in certify_lindblad_extension(&ch, &rho, p)? {
                    out.push(cert.with_descriptor(desc.clone()));
                }
                out.push(
                    gap(
                        "lindblad_unitary_exchange",
                        entropy_exchange(&unitary, &rho, p)?,
                        IDENTITY_TOL,
                    )?
                    .with_entropy_params(p)
                    .with_descriptor(format!("random_unitary(d={d})")),
                );
            }
        }
        Suite::Minkowski => {
            let a = random_positive(MINKOWSKI_DIM, sub(0));
            let z = random_positive(MINKOWSKI_DIM, sub(1));
            let desc = format!("random_positive({MINKOWSKI_DIM}) pair");
            for q in MINKOWSKI_Q {
                out.push(certify_minkowski(&a, &z, q)?.with_descriptor(desc.clone()));
            }
            out.push(flag("ky_fan_majorization", ky_fan_premise(&a, &z)?)?.with_descriptor(desc));
            let bipartite = random_density(6, sub(2))?;
            for q in SUBADDITIVITY_Q {
                out.push(
                    certify_subadditivity(&bipartite, (2, 3), q)?
                        .with_descriptor("random_density(2x3)"),
                );
            }
        }
        Suite::Kernel => out.extend(kernel_trial(d, n, seed)?),
    }
    Ok(out)
}

fn kernel_trial(d: usize, n: usize, seed: u64) -> Result<Vec<InequalityCertificate>> {
    let sub = |k: u64| derive_seed(seed, k);
    let desc = describe(d, n);
    let ch = random_channel(d, d, n, sub(0))?;
    let rho = random_density(d, sub(1))?;
    let mut out = Vec::new();

    // Representations.
    let choi = ch.choi();
    let back = choi.kraus_from_choi()?;
    out.push(gap(
        "choi_round_trip",
        back.choi().dynamical().frobenius_distance(choi.dynamical()),
        ROUND_TRIP_TOL,
    )?);
    let direct = ch.apply(&rho)?;
    out.push(gap(
        "apply_via_choi",
        choi.apply(&rho)?
            .matrix()
            .frobenius_distance(direct.matrix()),
        IDENTITY_TOL,
    )?);
    let v = ch.stinespring_isometry();
    let dilated = v.sandwich(rho.matrix())?;
    let system = partial_trace(&dilated, Subsystem::Second, (d, n))?;
    out.push(gap(
        "stinespring_system",
        system.frobenius_distance(direct.matrix()),
        IDENTITY_TOL,
    )?);
    let w = exchange_matrix(&ch, &rho)?;
    let environment = partial_trace(&dilated, Subsystem::First, (d, n))?;
    out.push(gap(
        "stinespring_environment",
        environment.frobenius_distance(w.matrix()),
        IDENTITY_TOL,
    )?);

    // Purification and exchange identities.
    let psi = purify(&rho)?;
    let marginal = partial_trace(psi.projector().matrix(), Subsystem::Second, (d, d))?;
    out.push(gap(
        "purification_marginal",
        marginal.frobenius_distance(rho.matrix()),
        IDENTITY_TOL,
    )?);
    let joint = final_joint_state(&ch, &rho)?;
    let r_before = partial_trace(psi.projector().matrix(), Subsystem::First, (d, d))?;
    let r_after = partial_trace(joint.matrix(), Subsystem::First, (d, d))?;
    out.push(gap(
        "reference_unchanged",
        r_after.frobenius_distance(&r_before),
        IDENTITY_TOL,
    )?);
    let f = entanglement_fidelity(&ch, &rho)?;
    out.push(InequalityCertificate::equality(
        "fidelity_forms",
        f,
        entanglement_fidelity_of(&ch, &psi)?,
        IDENTITY_TOL,
    )?);
    let rotated = psi.rotate_reference(&random_unitary(d, sub(2))?)?;
    out.push(InequalityCertificate::equality(
        "fidelity_purification_independent",
        f,
        entanglement_fidelity_of(&ch, &rotated)?,
        IDENTITY_TOL,
    )?);
    out.push(InequalityCertificate::new(
        "fidelity_in_unit_interval",
        f,
        1.0,
        IDENTITY_TOL,
    )?);
    out.push(InequalityCertificate::new(
        "fidelity_nonnegative",
        -f,
        0.0,
        IDENTITY_TOL,
    )?);
    let w_spec = hermitian_eigenvalues(w.matrix())?;
    let joint_spec = hermitian_eigenvalues(joint.matrix())?;
    out.push(gap(
        "exchange_spectrum",
        spectrum_gap(&w_spec, &joint_spec),
        IDENTITY_TOL,
    )?);

    let mixed = DensityMatrix::completely_mixed(d)?;
    for (q, s) in [(0.5, 1.0), (1.0, 1.0), (2.0, 0.0), (2.0, 1.0), (3.0, -1.0)] {
        let p = params(q, s)?;
        let m = map_entropy(&ch, p)?;
        out.push(
            InequalityCertificate::equality(
                "map_equals_exchange",
                m,
                entropy_exchange(&ch, &mixed, p)?,
                IDENTITY_TOL,
            )?
            .with_entropy_params(p),
        );
        out.push(
            InequalityCertificate::equality(
                "map_entropy_kraus_independent",
                m,
                map_entropy(&back, p)?,
                IDENTITY_TOL,
            )?
            .with_entropy_params(p),
        );
    }

    // Ω extension shares the nonzero spectrum of ρ.
    let omega = omega_extension(&ch, &rho)?;
    out.push(gap(
        "omega_spectrum",
        spectrum_gap(&omega.state.eigenvalues()?, &rho.eigenvalues()?),
        IDENTITY_TOL,
    )?);

    // Eigensolver reconstruction on the dynamical matrix.
    let spectrum = hermitian_eig(choi.dynamical())?;
    out.push(gap(
        "eigen_reconstruction",
        spectrum.reconstruct().frobenius_distance(choi.dynamical()),
        IDENTITY_TOL,
    )?);

    // Birkhoff decomposition of a random doubly stochastic matrix.
    let s = random_doubly_stochastic(BIRKHOFF_DIM, sub(3))?;
    let terms = birkhoff_decompose(&s)?;
    out.push(gap(
        "birkhoff_reconstruction",
        birkhoff_reconstruction_error(&s, &terms),
        BIRKHOFF_TOL,
    )?);
    let limit = ((BIRKHOFF_DIM - 1) * (BIRKHOFF_DIM - 1) + 1) as f64;
    out.push(InequalityCertificate::new(
        "birkhoff_term_count",
        terms.len() as f64,
        limit,
        0.0,
    )?);
    let x: Vec<f64> = (0..BIRKHOFF_DIM)
        .map(|k| ((k * 7 + 3) % 5) as f64)
        .collect();
    out.push(flag(
        "stochastic_majorization",
        check_majorization(&s.apply(&x), &x)?,
    )?);

    Ok(out
        .into_iter()
        .map(|c| c.with_descriptor(desc.clone()))
        .collect())
}
