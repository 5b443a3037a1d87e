//! Parsers and printers for the `lascoux` command-line tool. Every printer
//! has a parser that accepts its output, so command output can be read back.

pub mod format;
