//! placeholder
pub fn nothing() {}
