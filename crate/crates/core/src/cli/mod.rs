//! Documents, fixture catalog and the command-line driver.

pub mod bundle;
pub mod catalog;
pub mod run;
