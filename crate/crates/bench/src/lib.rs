pub use dqe_core;
