//! Simulation: exact state vectors, stabilizer tableau sampling with Pauli
//! frames, the three-source noise modelta, and LSR/TVD metrics.

mod frame;
mod metrics;
mod noise;
pub mod statevector;
mod tableau;

pub use frame::{sample, ShotBatch};
pub use metrics::{postselect, pearson, tvd, Distribution, EmptyKeptSet};
pub use noise::{apply_noise_channels, cliffordize, NoiseError, NoiseModel, NoisyCircuit, NoisyOp};
pub use statevector::{
    circuit_unitary, circuits_equal_up_to_phase, unitary_distance_up_to_phase, unitary_of,
    StateVector, StateVectorError,
};
pub use tableau::Tableau;
