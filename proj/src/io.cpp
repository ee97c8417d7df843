#include "gcnsi/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

#include "json.hpp"

namespace gcnsi::io {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Line reader that skips blank lines and `#` comments and tracks line numbers.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, buf_)) {
      ++line_;
      std::string_view view = buf_;
      if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
      tokens = tokenize(view);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }
  std::size_t line() const { return line_; }

  std::size_t to_index(std::string_view tok, const char* what) const {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(std::string("expected non-negative integer for ") + what + ", got '" + std::string(tok) + "'");
    }
    return v;
  }

  double to_double(std::string_view tok, const char* what) const {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(std::string("expected number for ") + what + ", got '" + std::string(tok) + "'");
    }
    return v;
  }

 private:
  std::istream& in_;
  std::string source_;
  std::string buf_;
  std::size_t line_ = 0;
};

void expect_arity(const LineReader& r, const std::vector<std::string_view>& t, std::size_t n) {
  if (t.size() != n) {
    r.fail("'" + std::string(t[0]) + "' takes " + std::to_string(n - 1) + " fields, got " +
           std::to_string(t.size() - 1));
  }
}

std::ifstream open_in(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open '" + p.string() + "' for reading");
  return in;
}

bool parse_bool(std::string_view v, bool& out) {
  if (v == "true" || v == "1" || v == "yes") {
    out = true;
    return true;
  }
  if (v == "false" || v == "0" || v == "no") {
    out = false;
    return true;
  }
  return false;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

// ---------------------------------------------------------------- datasets

void write_dataset(std::ostream& out, const LabeledDataset& d) {
  const std::size_t n = d.num_nodes();
  const std::size_t m = d.x.is_identity() ? 0 : d.x.cols();
  out << "nodes " << n << " classes " << d.k << " features " << m << '\n';
  for (const auto& [i, j] : d.graph.edge_list()) out << "edge " << i << ' ' << j << '\n';
  for (std::size_t i = 0; i < n; ++i) out << "label " << i << ' ' << d.y[i] << '\n';
  if (m > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      out << "feature " << i;
      for (double v : d.x.dense().row(i)) out << ' ' << format_double(v);
      out << '\n';
    }
  }
  for (std::size_t i : d.split.train) out << "split train " << i << '\n';
  for (std::size_t i : d.split.validation) out << "split val " << i << '\n';
  for (std::size_t i : d.split.test) out << "split test " << i << '\n';
}

LabeledDataset read_dataset(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string_view> t;
  if (!r.next(t)) r.fail("empty dataset file");
  if (t.size() != 6 || t[0] != "nodes" || t[2] != "classes" || t[4] != "features") {
    r.fail("expected header 'nodes <n> classes <k> features <m>'");
  }
  const std::size_t n = r.to_index(t[1], "node count");
  const std::size_t k = r.to_index(t[3], "class count");
  const std::size_t m = r.to_index(t[5], "feature count");
  if (n == 0) r.fail("node count must be positive");
  if (k < 2) r.fail("class count must be >= 2");

  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  std::vector<std::optional<Label>> labels(n);
  std::vector<std::vector<double>> features(m > 0 ? n : 0);
  std::vector<char> split_seen(n, 0);
  NodeSplit split;

  auto node = [&](std::string_view tok) {
    const std::size_t i = r.to_index(tok, "node index");
    if (i >= n) r.fail("node index " + std::to_string(i) + " out of range for " + std::to_string(n) + " nodes");
    return i;
  };

  while (r.next(t)) {
    const std::string_view kind = t[0];
    if (kind == "edge") {
      expect_arity(r, t, 3);
      const std::size_t i = node(t[1]);
      const std::size_t j = node(t[2]);
      if (i == j) r.fail("self-loop at node " + std::to_string(i));
      const Edge key{std::min(i, j), std::max(i, j)};
      if (!seen_edges.insert(key).second) {
        r.fail("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
      }
      edges.push_back(key);
    } else if (kind == "label") {
      expect_arity(r, t, 3);
      const std::size_t i = node(t[1]);
      const std::size_t c = r.to_index(t[2], "class");
      if (c >= k) r.fail("class " + std::to_string(c) + " out of range for " + std::to_string(k) + " classes");
      if (labels[i]) r.fail("node " + std::to_string(i) + " labeled twice");
      labels[i] = static_cast<Label>(c);
    } else if (kind == "feature") {
      if (m == 0) r.fail("feature line in a dataset declared with 0 features");
      if (t.size() != m + 2) {
        r.fail("feature line has " + std::to_string(t.size() - 2) + " values, expected " + std::to_string(m));
      }
      const std::size_t i = node(t[1]);
      if (!features[i].empty()) r.fail("node " + std::to_string(i) + " has two feature lines");
      features[i].reserve(m);
      for (std::size_t p = 2; p < t.size(); ++p) {
        const double v = r.to_double(t[p], "feature value");
        if (!std::isfinite(v)) r.fail("non-finite feature value");
        features[i].push_back(v);
      }
    } else if (kind == "split") {
      expect_arity(r, t, 3);
      const std::size_t i = node(t[2]);
      if (split_seen[i]) r.fail("node " + std::to_string(i) + " appears in more than one split entry");
      split_seen[i] = 1;
      if (t[1] == "train") {
        split.train.push_back(i);
      } else if (t[1] == "val") {
        split.validation.push_back(i);
      } else if (t[1] == "test") {
        split.test.push_back(i);
      } else {
        r.fail("unknown split '" + std::string(t[1]) + "' (expected train, val or test)");
      }
    } else {
      r.fail("unknown directive '" + std::string(kind) + "'");
    }
  }

  LabeledDataset d;
  d.k = static_cast<int>(k);
  d.graph = Graph(n, edges);
  d.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!labels[i]) r.fail("node " + std::to_string(i) + " has no label");
    d.y[i] = *labels[i];
  }
  if (m == 0) {
    d.x = Features::identity(n);
  } else {
    DenseMatrix x(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      if (features[i].empty()) r.fail("node " + std::to_string(i) + " has no feature line");
      std::copy(features[i].begin(), features[i].end(), x.row(i).begin());
    }
    d.x = Features(std::move(x));
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.validation.begin(), split.validation.end());
  std::sort(split.test.begin(), split.test.end());
  d.split = std::move(split);
  return d;
}

// ------------------------------------------------------------ side info

void write_side_info(std::ostream& out, const SideInfo& si, int k) {
  out << "sideinfo " << si.y_s.size() << ' ' << k << " source " << to_string(si.source) << '\n';
  for (std::size_t i = 0; i < si.y_s.size(); ++i) out << "si " << i << ' ' << si.y_s[i] << '\n';
}

SideInfo read_side_info(std::istream& in, int* k_out, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string_view> t;
  if (!r.next(t)) r.fail("empty side-information file");
  if (t.size() != 5 || t[0] != "sideinfo" || t[3] != "source") {
    r.fail("expected header 'sideinfo <n> <k> source <tag>'");
  }
  const std::size_t n = r.to_index(t[1], "node count");
  const std::size_t k = r.to_index(t[2], "class count");
  if (k < 2) r.fail("class count must be >= 2");
  const auto tag = parse_side_info_source(t[4]);
  if (!tag) r.fail("unknown side-information source '" + std::string(t[4]) + "'");

  std::vector<std::optional<Label>> y(n);
  while (r.next(t)) {
    if (t[0] != "si") r.fail("unknown directive '" + std::string(t[0]) + "'");
    expect_arity(r, t, 3);
    const std::size_t i = r.to_index(t[1], "node index");
    if (i >= n) r.fail("node index " + std::to_string(i) + " out of range");
    const std::size_t c = r.to_index(t[2], "class");
    if (c >= k) r.fail("class " + std::to_string(c) + " out of range");
    if (y[i]) r.fail("node " + std::to_string(i) + " listed twice");
    y[i] = static_cast<Label>(c);
  }
  SideInfo si;
  si.source = *tag;
  si.y_s.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!y[i]) r.fail("node " + std::to_string(i) + " has no side information");
    si.y_s[i] = *y[i];
  }
  if (k_out) *k_out = static_cast<int>(k);
  return si;
}

// --------------------------------------------------------------- config

std::string to_string(ClassifierKind k) { return k == ClassifierKind::kGcn ? "gcn" : "mlp"; }

std::string to_string(RecoveryInput k) {
  switch (k) {
    case RecoveryInput::kFeatures: return "feature";
    case RecoveryInput::kNeighborhood: return "neighborhood";
    case RecoveryInput::kBoth: return "both";
  }
  return "neighborhood";
}

std::string to_string(ModelSelection s) {
  return s == ModelSelection::kBestValidation ? "best_validation" : "final_epoch";
}

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
  struct Entry {
    std::string value;
    std::size_t line;
  };
  std::map<std::string, Entry> entries;
  std::string buf;
  std::size_t line = 0;
  while (std::getline(in, buf)) {
    ++line;
    std::string_view view = buf;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, line, "expected 'key = value'");
    const std::string key(trim(view.substr(0, eq)));
    const std::string value(trim(view.substr(eq + 1)));
    if (key.empty() || value.empty()) throw ParseError(source, line, "expected 'key = value'");
    if (!entries.emplace(key, Entry{value, line}).second) {
      throw ParseError(source, line, "key '" + key + "' given twice");
    }
  }

  ExperimentConfig cfg;
  if (auto it = entries.find("preset"); it != entries.end()) {
    try {
      cfg = ExperimentConfig::from_preset(it->second.value);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, it->second.line, e.what());
    }
    entries.erase(it);
  }

  bool rec_epochs = false, rec_lr = false, rec_hidden = false, rec_l2 = false;
  for (const auto& [key, entry] : entries) {
    auto fail = [&](const std::string& what) -> void {
      throw ParseError(source, entry.line, "key '" + key + "': " + what);
    };
    auto num = [&]() {
      double v = 0.0;
      const auto& s = entry.value;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) fail("expected a number, got '" + s + "'");
      return v;
    };
    auto integer = [&]() {
      long long v = 0;
      const auto& s = entry.value;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) fail("expected an integer, got '" + s + "'");
      return v;
    };
    auto count = [&]() {
      const long long v = integer();
      if (v < 0) fail("must be non-negative");
      return v;
    };

    if (key == "p_th") {
      cfg.decision.p_th = num();
    } else if (key == "f_th") {
      cfg.decision.f_th = num();
    } else if (key == "e_u") {
      cfg.decision.e_u = static_cast<int>(count());
    } else if (key == "max_epochs") {
      cfg.max_epochs = static_cast<int>(count());
    } else if (key == "lr_phase1") {
      cfg.lr_phase1 = num();
    } else if (key == "lr_phase2") {
      cfg.lr_phase2 = num();
    } else if (key == "l2_factor") {
      cfg.l2_factor = num();
    } else if (key == "hidden_size") {
      cfg.hidden_size = static_cast<std::size_t>(count());
    } else if (key == "adam_beta1") {
      cfg.adam.beta1 = num();
    } else if (key == "adam_beta2") {
      cfg.adam.beta2 = num();
    } else if (key == "adam_epsilon") {
      cfg.adam.epsilon = num();
    } else if (key == "alpha") {
      cfg.alpha = num();
    } else if (key == "embed_si") {
      bool b = false;
      if (!parse_bool(entry.value, b)) fail("expected true or false");
      cfg.embed_si = b;
    } else if (key == "runs") {
      cfg.runs = static_cast<int>(count());
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(count());
    } else if (key == "selection") {
      if (entry.value == "best_validation") {
        cfg.selection = ModelSelection::kBestValidation;
      } else if (entry.value == "final_epoch") {
        cfg.selection = ModelSelection::kFinalEpoch;
      } else {
        fail("expected best_validation or final_epoch");
      }
    } else if (key == "recovery.classifier") {
      if (entry.value == "gcn") {
        cfg.recovery.classifier = ClassifierKind::kGcn;
      } else if (entry.value == "mlp") {
        cfg.recovery.classifier = ClassifierKind::kMlp;
      } else {
        fail("expected gcn or mlp");
      }
    } else if (key == "recovery.input") {
      if (entry.value == "feature") {
        cfg.recovery.input = RecoveryInput::kFeatures;
      } else if (entry.value == "neighborhood") {
        cfg.recovery.input = RecoveryInput::kNeighborhood;
      } else if (entry.value == "both") {
        cfg.recovery.input = RecoveryInput::kBoth;
      } else {
        fail("expected feature, neighborhood or both");
      }
    } else if (key == "recovery.r") {
      cfg.recovery.r = static_cast<int>(count());
    } else if (key == "recovery.epochs") {
      cfg.recovery.train.epochs = static_cast<int>(count());
      rec_epochs = true;
    } else if (key == "recovery.learning_rate") {
      cfg.recovery.train.learning_rate = num();
      rec_lr = true;
    } else if (key == "recovery.hidden_size") {
      cfg.recovery.train.hidden_size = static_cast<std::size_t>(count());
      rec_hidden = true;
    } else if (key == "recovery.l2") {
      cfg.recovery.train.l2 = num();
      rec_l2 = true;
    } else if (key == "recovery.seed") {
      cfg.recovery.train.seed = static_cast<std::uint64_t>(count());
    } else {
      throw ParseError(source, entry.line, "unknown key '" + key + "'");
    }
  }
  if (!rec_epochs) cfg.recovery.train.epochs = cfg.max_epochs;
  if (!rec_lr) cfg.recovery.train.learning_rate = cfg.lr_phase1;
  if (!rec_hidden) cfg.recovery.train.hidden_size = cfg.hidden_size;
  if (!rec_l2) cfg.recovery.train.l2 = cfg.l2_factor;
  cfg.recovery.train.adam = cfg.adam;

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, line, e.what());
  }
  return cfg;
}

void write_config(std::ostream& out, const ExperimentConfig& cfg) {
  out << "preset = " << cfg.preset << '\n'
      << "p_th = " << format_double(cfg.decision.p_th) << '\n'
      << "f_th = " << format_double(cfg.decision.f_th) << '\n'
      << "e_u = " << cfg.decision.e_u << '\n'
      << "max_epochs = " << cfg.max_epochs << '\n'
      << "lr_phase1 = " << format_double(cfg.lr_phase1) << '\n'
      << "lr_phase2 = " << format_double(cfg.lr_phase2) << '\n'
      << "l2_factor = " << format_double(cfg.l2_factor) << '\n'
      << "hidden_size = " << cfg.hidden_size << '\n'
      << "adam_beta1 = " << format_double(cfg.adam.beta1) << '\n'
      << "adam_beta2 = " << format_double(cfg.adam.beta2) << '\n'
      << "adam_epsilon = " << format_double(cfg.adam.epsilon) << '\n';
  if (cfg.alpha) out << "alpha = " << format_double(*cfg.alpha) << '\n';
  out << "embed_si = " << (cfg.embed_si ? "true" : "false") << '\n'
      << "runs = " << cfg.runs << '\n'
      << "seed = " << cfg.seed << '\n'
      << "selection = " << to_string(cfg.selection) << '\n'
      << "recovery.classifier = " << to_string(cfg.recovery.classifier) << '\n'
      << "recovery.input = " << to_string(cfg.recovery.input) << '\n'
      << "recovery.r = " << cfg.recovery.r << '\n'
      << "recovery.epochs = " << cfg.recovery.train.epochs << '\n'
      << "recovery.learning_rate = " << format_double(cfg.recovery.train.learning_rate) << '\n'
      << "recovery.hidden_size = " << cfg.recovery.train.hidden_size << '\n'
      << "recovery.l2 = " << format_double(cfg.recovery.train.l2) << '\n'
      << "recovery.seed = " << cfg.recovery.train.seed << '\n';
}

// -------------------------------------------------------------- metrics

namespace {

constexpr std::string_view kMetricsHeader = "epoch,phase,loss,train_acc,val_acc,test_acc,s_size";

void write_epoch_row(std::ostream& out, const EpochMetrics& e) {
  out << e.epoch << ',' << e.phase << ',' << format_double(e.loss) << ','
      << format_double(e.train_acc) << ',' << format_double(e.val_acc) << ','
      << format_double(e.test_acc) << ',' << e.s_size << '\n';
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

void write_metrics_csv(std::ostream& out, const RunMetrics& m) {
  out << kMetricsHeader << '\n';
  for (const auto& e : m.epochs) write_epoch_row(out, e);
}

std::vector<EpochMetrics> read_metrics_csv(std::istream& in, const std::string& source) {
  std::string buf;
  std::size_t line = 0;
  if (!std::getline(in, buf)) throw ParseError(source, 0, "empty metrics file");
  ++line;
  if (trim(buf) != kMetricsHeader) {
    throw ParseError(source, line, "expected header '" + std::string(kMetricsHeader) + "'");
  }
  std::vector<EpochMetrics> rows;
  while (std::getline(in, buf)) {
    ++line;
    const std::string_view view = trim(buf);
    if (view.empty()) continue;
    const auto f = split_commas(view);
    if (f.size() != 7) throw ParseError(source, line, "expected 7 columns, got " + std::to_string(f.size()));
    auto integer = [&](std::string_view s) {
      long long v = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(source, line, "bad integer '" + std::string(s) + "'");
      }
      return v;
    };
    auto real = [&](std::string_view s) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(source, line, "bad number '" + std::string(s) + "'");
      }
      return v;
    };
    EpochMetrics e;
    e.epoch = static_cast<int>(integer(f[0]));
    e.phase = static_cast<int>(integer(f[1]));
    e.loss = real(f[2]);
    e.train_acc = real(f[3]);
    e.val_acc = real(f[4]);
    e.test_acc = real(f[5]);
    e.s_size = static_cast<std::size_t>(integer(f[6]));
    rows.push_back(e);
  }
  return rows;
}

void write_curves_csv(std::ostream& out, const std::vector<std::vector<EpochMetrics>>& runs) {
  out << "run," << kMetricsHeader << '\n';
  for (std::size_t r = 0; r < runs.size(); ++r) {
    for (const auto& e : runs[r]) {
      out << r << ',';
      write_epoch_row(out, e);
    }
  }
}

std::string summary_json(const Summary& s, const ExperimentConfig& cfg, bool baseline) {
  using nlohmann::json;
  auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  json j;
  j["model"] = baseline ? "gcn" : "gcn-si";
  j["selection"] = to_string(cfg.selection);
  j["test_accuracy"] = {{"mean", num(s.mean)}, {"std", num(s.stddev)}, {"min", num(s.min)},
                        {"max", num(s.max)}, {"runs", s.runs.size()}};
  j["side_info_accuracy"] = s.side_info_mean ? num(*s.side_info_mean) : json(nullptr);
  json runs = json::array();
  for (const auto& r : s.runs) {
    runs.push_back({{"seed", r.seed},
                    {"best_epoch", r.best_epoch},
                    {"best_val_acc", num(r.best_val_acc)},
                    {"test_acc_at_best", num(r.test_acc_at_best)},
                    {"final_test_acc", num(r.final_test_acc)},
                    {"side_info_acc", r.side_info_acc ? num(*r.side_info_acc) : json(nullptr)},
                    {"fallback_epochs", r.fallback_epochs}});
  }
  j["per_run"] = std::move(runs);

  json c;
  c["preset"] = cfg.preset;
  c["p_th"] = cfg.decision.p_th;
  c["f_th"] = cfg.decision.f_th;
  c["e_u"] = cfg.decision.e_u;
  c["max_epochs"] = cfg.max_epochs;
  c["lr_phase1"] = cfg.lr_phase1;
  c["lr_phase2"] = cfg.lr_phase2;
  c["l2_factor"] = cfg.l2_factor;
  c["hidden_size"] = cfg.hidden_size;
  c["adam_beta1"] = cfg.adam.beta1;
  c["adam_beta2"] = cfg.adam.beta2;
  c["adam_epsilon"] = cfg.adam.epsilon;
  c["alpha"] = cfg.alpha ? json(*cfg.alpha) : json(nullptr);
  c["embed_si"] = cfg.embed_si;
  c["runs"] = cfg.runs;
  c["seed"] = cfg.seed;
  c["recovery"] = {{"classifier", to_string(cfg.recovery.classifier)},
                   {"input", to_string(cfg.recovery.input)},
                   {"r", cfg.recovery.r},
                   {"epochs", cfg.recovery.train.epochs},
                   {"learning_rate", cfg.recovery.train.learning_rate},
                   {"hidden_size", cfg.recovery.train.hidden_size},
                   {"l2", cfg.recovery.train.l2},
                   {"seed", cfg.recovery.train.seed}};
  j["config"] = std::move(c);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------- files

LabeledDataset load_dataset(const std::filesystem::path& p) {
  auto in = open_in(p);
  LabeledDataset d = read_dataset(in, p.string());
  d.name = p.stem().string();
  return d;
}

SideInfo load_side_info(const std::filesystem::path& p, int* k_out) {
  auto in = open_in(p);
  return read_side_info(in, k_out, p.string());
}

ExperimentConfig load_config(const std::filesystem::path& p) {
  auto in = open_in(p);
  return parse_config(in, p.string());
}

void save_text(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot open '" + p.string() + "' for writing");
  out << body;
  if (!out) throw std::runtime_error("failed writing '" + p.string() + "'");
}

}  // namespace gcnsi::io
