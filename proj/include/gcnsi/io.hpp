#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcnsi/dataset.hpp"
#include "gcnsi/experiment.hpp"
#include "gcnsi/side_info.hpp"

namespace gcnsi::io {

// Malformed input. The message carries the source name and line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Dataset text format:
//   nodes <n> classes <k> features <m>
//   edge <i> <j>                 one per undirected edge, i < j
//   label <i> <c>                one per node
//   feature <i> <v0> ... <vm-1>  one per node when m > 0; m = 0 means identity
//   split train|val|test <i>     optional
void write_dataset(std::ostream& out, const LabeledDataset& d);
LabeledDataset read_dataset(std::istream& in, const std::string& source = "<dataset>");

// Side-information text format:
//   sideinfo <n> <k> source <tag>
//   si <i> <c>                   one per node
void write_side_info(std::ostream& out, const SideInfo& si, int k);
SideInfo read_side_info(std::istream& in, int* k_out = nullptr,
                        const std::string& source = "<sideinfo>");

// Flat `key = value` config. `#` starts a comment. Unknown or repeated keys
// are errors. `preset` selects the base column before other keys apply;
// recovery.* training keys not given explicitly follow the main model.
ExperimentConfig parse_config(std::istream& in, const std::string& source = "<config>");
void write_config(std::ostream& out, const ExperimentConfig& cfg);

std::string to_string(ClassifierKind k);
std::string to_string(RecoveryInput k);
std::string to_string(ModelSelection s);

// Per-epoch CSV: epoch,phase,loss,train_acc,val_acc,test_acc,s_size
void write_metrics_csv(std::ostream& out, const RunMetrics& m);
std::vector<EpochMetrics> read_metrics_csv(std::istream& in, const std::string& source = "<csv>");

// Long-format merge of several metrics files, one `run` column prepended.
void write_curves_csv(std::ostream& out, const std::vector<std::vector<EpochMetrics>>& runs);

// summary.json body: accuracy statistics, side-information accuracy, per-run
// results and the resolved configuration.
std::string summary_json(const Summary& s, const ExperimentConfig& cfg, bool baseline);

// File helpers that report the offending path.
LabeledDataset load_dataset(const std::filesystem::path& p);
SideInfo load_side_info(const std::filesystem::path& p, int* k_out = nullptr);
ExperimentConfig load_config(const std::filesystem::path& p);
void save_text(const std::filesystem::path& p, const std::string& body);

std::string format_double(double v);

}  // namespace gcnsi::io
