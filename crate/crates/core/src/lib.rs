pub mod cli;
pub mod cliquesep;
pub mod coloring;
pub mod detect;
pub mod graph;
pub mod io;
pub mod matching;
pub mod modular;
pub mod oracle;
pub mod pipeline;
