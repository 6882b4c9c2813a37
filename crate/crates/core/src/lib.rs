pub mod error;
pub mod exact;
pub mod hypseries;
pub mod angular;
pub mod prob;
pub mod verify;
pub mod cli;
