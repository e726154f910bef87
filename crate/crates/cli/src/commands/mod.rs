pub mod baseline;
pub mod evaluate;
pub mod summarize;
pub mod sweep;
