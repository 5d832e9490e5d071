#include "qfloer/cli/cli.hpp"

#include "qfloer/chain/checks.hpp"
#include "qfloer/chain/equivariant.hpp"
#include "qfloer/errors.hpp"
#include "qfloer/io/json_io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace qfloer::cli {

namespace {

constexpr std::size_t kMaxSnapshotLength = 6;
constexpr std::size_t kMaxSnapshotLattice = 8;

std::size_t checked_index(const QLattice& lat, std::size_t i) {
  if (i >= lat.size()) {
    throw SchemaError("index " + std::to_string(i) + " out of range for a lattice of size " + std::to_string(lat.size()));
  }
  return i;
}

void print_value(std::ostream& out, const QLaurent& v, bool json) {
  if (json) {
    out << io::dump({{"schema", io::kSchemaVersion}, {"value", io::to_json(v)}, {"at_q1", io::to_json(v.eval_at_one())}});
    return;
  }
  out << "value: " << v.str() << "\n";
  out << "q=1: " << v.eval_at_one().fraction_str() << "\n";
}

void print_table(std::ostream& out, const EquivariantTable& t, bool json) {
  if (json) {
    out << io::dump(io::to_json(t));
    return;
  }
  out << "degree\tweight\tdim\n";
  for (const auto& [key, dim] : t.entries()) out << key.first << "\t" << key.second.fraction_str() << "\t" << dim << "\n";
  QLaurent v = q_intersection(t);
  out << "q_intersection: " << v.str() << "\n";
  out << "q=1: " << v.eval_at_one().fraction_str() << "\n";
}

void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw SchemaError("cannot write '" + path + "'");
  f << text;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const IdentityError*>(&e) || dynamic_cast<const NotEquivariant*>(&e)) return kIdentityFailure;
  if (dynamic_cast<const LatticeInvariantError*>(&e)) return kLatticeInvariant;
  if (dynamic_cast<const SplittingError*>(&e)) return kSplitting;
  if (dynamic_cast<const SchemaError*>(&e) || dynamic_cast<const SizeMismatch*>(&e) ||
      dynamic_cast<const NotASphere*>(&e) || dynamic_cast<const DegreeError*>(&e) ||
      dynamic_cast<const MissingTensor*>(&e) || dynamic_cast<const DivisibilityError*>(&e) ||
      dynamic_cast<const UnsupportedDimension*>(&e)) {
    return kSchemaError;
  }
  return kInternal;
}

unsigned worker_count() {
  if (const char* env = std::getenv("QFLOER_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<TwistWord> reduced_words(const QLattice& lat, std::size_t max_len) {
  std::vector<TwistLetter> alphabet;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!lat.is_sphere(i)) continue;
    alphabet.push_back({i, -1});
    alphabet.push_back({i, 1});
  }
  std::vector<TwistWord> words{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t w = begin; w < end; ++w) {
      for (const auto& letter : alphabet) {
        const TwistWord& prev = words[w];
        if (!prev.empty() && prev.back().sphere == letter.sphere && prev.back().exponent == -letter.exponent) continue;
        TwistWord next = prev;
        next.push_back(letter);
        words.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return words;
}

std::vector<SnapshotRow> snapshot(const QLattice& lat, std::size_t max_len, unsigned threads) {
  const std::vector<TwistWord> words = reduced_words(lat, max_len);
  const std::size_t size = lat.size();
  std::vector<SnapshotRow> rows(words.size() * size * size);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t w = next++; w < words.size(); w = next++) {
      for (std::size_t s = 0; s < size; ++s) {
        LatticeVector image = apply_word(lat, words[w], lat.basis_vector(s));
        for (std::size_t t = 0; t < size; ++t) {
          rows[(w * size + s) * size + t] = {words[w], s, t, pair(lat, image, lat.basis_vector(t))};
        }
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(words.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string word_str(const TwistWord& w) {
  if (w.empty()) return ".";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i].sphere) + (w[i].exponent > 0 ? "+" : "-");
  }
  return s;
}

std::string snapshot_text(const QLattice& lat, std::size_t max_len, const std::vector<SnapshotRow>& rows) {
  std::ostringstream out;
  out << "# n=" << lat.n() << " size=" << lat.size() << " max_len=" << max_len << "\n";
  out << "word\tsource\ttarget\tvalue\tq=1\n";
  for (const auto& r : rows) {
    out << word_str(r.word) << "\t" << r.source << "\t" << r.target << "\t" << r.value.str() << "\t"
        << r.value.eval_at_one().fraction_str() << "\n";
  }
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-intersection numbers, twist words and chain-level checks", "qfloer"};
  app.require_subcommand(1);

  std::string lattice_path, word_path, model_path, out_path, l0, l1;
  std::size_t i = 0, j = 0, max_len = 0;
  bool json = false;

  auto* pair_cmd = app.add_subcommand("pair", "Pairing of two basis classes");
  pair_cmd->add_option("lattice", lattice_path, "Lattice JSON")->required();
  pair_cmd->add_option("i", i)->required();
  pair_cmd->add_option("j", j)->required();
  pair_cmd->add_flag("--json", json);

  auto* twist_cmd = app.add_subcommand("twist", "Pairing after applying a twist word to the source");
  twist_cmd->add_option("lattice", lattice_path, "Lattice JSON")->required();
  twist_cmd->add_option("word", word_path, "Word JSON")->required();
  twist_cmd->add_option("i", i, "source index")->required();
  twist_cmd->add_option("j", j, "target index")->required();
  twist_cmd->add_flag("--json", json);

  auto* check_cmd = app.add_subcommand("check", "Run every applicable chain-level checker");
  check_cmd->add_option("model", model_path, "Model JSON")->required();
  check_cmd->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* table_cmd = app.add_subcommand("table", "Equivariant table and q-intersection number of HF(L0, L1)");
  table_cmd->add_option("model", model_path, "Model JSON")->required();
  table_cmd->add_option("L0", l0)->required();
  table_cmd->add_option("L1", l1)->required();
  table_cmd->add_flag("--json", json);

  auto* snap_cmd = app.add_subcommand("snapshot", "All reduced words up to a length, with every pairing");
  snap_cmd->add_option("lattice", lattice_path, "Lattice JSON")->required();
  snap_cmd->add_option("--max-len", max_len)->required();
  snap_cmd->add_option("--out", out_path, "Output file")->required();

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kSchemaError;
  }

  try {
    if (*pair_cmd) {
      QLattice lat = io::lattice_from_json(io::read_file(lattice_path));
      print_value(out, lat.pairing()(checked_index(lat, i), checked_index(lat, j)), json);
    } else if (*twist_cmd) {
      QLattice lat = io::lattice_from_json(io::read_file(lattice_path));
      TwistWord w = io::word_from_json(io::read_file(word_path));
      validate_word(lat, w);
      LatticeVector image = apply_word(lat, w, lat.basis_vector(checked_index(lat, i)));
      print_value(out, pair(lat, image, lat.basis_vector(checked_index(lat, j))), json);
    } else if (*check_cmd) {
      ChainModel m = io::model_from_json(io::read_file(model_path));
      std::vector<Report> reports = check_all(m);
      emit(out_path, out, io::dump(io::reports_to_json(reports)));
      int code = kOk;
      for (const auto& r : reports) {
        if (r.status != Status::fail) continue;
        std::string objs;
        for (const auto& o : r.objects) objs += (objs.empty() ? "" : ",") + o;
        err << "FAIL " << r.identity << " [" << objs << "]\n";
        code = kIdentityFailure;
      }
      return code;
    } else if (*table_cmd) {
      ChainModel m = io::model_from_json(io::read_file(model_path));
      for (const auto& l : {l0, l1}) {
        if (std::find(m.lagrangians.begin(), m.lagrangians.end(), l) == m.lagrangians.end()) {
          throw SchemaError("unknown lagrangian '" + l + "'");
        }
      }
      print_table(out, floer_table(m, {l0, l1}), json);
    } else if (*snap_cmd) {
      QLattice lat = io::lattice_from_json(io::read_file(lattice_path));
      if (max_len > kMaxSnapshotLength) throw SchemaError("--max-len is limited to " + std::to_string(kMaxSnapshotLength));
      if (lat.size() > kMaxSnapshotLattice) throw SchemaError("snapshot is limited to lattices of size " + std::to_string(kMaxSnapshotLattice));
      emit(out_path, out, snapshot_text(lat, max_len, snapshot(lat, max_len, worker_count())));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kOk;
}

}  // namespace qfloer::cli
