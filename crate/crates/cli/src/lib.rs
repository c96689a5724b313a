//! Front end for the `realtri` solver: the system file format, the
//! versioned JSON report and the golden-file corpus runner.

pub mod corpus;
pub mod report;
pub mod system_file;

pub use report::{Document, Mode};
pub use system_file::{parse_system, ParseError};
