//! Fixtures shared by the benchmarks.

use scenemem_cli::synthetic::assembly_demo;
use scenemem_cli::{Config, DemonstrationLog, ReplaySetup};
use scenemem_core::{Degree, Observation, Signature};

/// The assembly demonstration with its default setup.
pub fn assembly() -> (DemonstrationLog, ReplaySetup) {
    let setup = ReplaySetup::from_config(&Config::default()).expect("default config is valid");
    (DemonstrationLog::Positions(assembly_demo()), setup)
}

/// A three-object tabletop scene over `front`/`behind`, mirrors included.
pub fn tabletop() -> (Signature, Observation) {
    let sig = Signature::new(
        &["front", "behind"],
        &["CUP", "GLASS"],
        &[("front", "behind")],
        &[],
    )
    .expect("valid signature");
    let d = |v| Degree::new(v).expect("valid degree");
    let obs = Observation::new(1)
        .with_type("g1", "GLASS", d(0.9))
        .with_type("g2", "CUP", d(0.7))
        .with_type("g3", "CUP", d(0.8))
        .with_type("g3", "GLASS", d(0.1))
        .with_assertion("g1", "g2", "front", d(1.0))
        .with_assertion("g1", "g3", "front", d(0.6))
        .with_assertion("g2", "g3", "front", d(0.2))
        .with_assertion("g2", "g1", "behind", d(1.0))
        .with_assertion("g3", "g1", "behind", d(0.6))
        .with_assertion("g3", "g2", "behind", d(0.2));
    (sig, obs)
}
