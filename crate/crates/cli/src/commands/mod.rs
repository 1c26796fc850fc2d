pub mod analyze;
pub mod census;
pub mod classify;
pub mod maxent;
pub mod verify;
