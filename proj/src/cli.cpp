#include "richwords/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "richwords/construction.hpp"
#include "richwords/extension.hpp"
#include "richwords/json_io.hpp"
#include "richwords/pal_index.hpp"
#include "richwords/phi_search.hpp"
#include "richwords/richness.hpp"
#include "richwords/switches.hpp"

namespace richwords::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kInlineLimit = 100000;  // longest word inlined in JSON
constexpr std::size_t kTextLimit = 1000;      // longest word printed without --raw
constexpr std::size_t kExcerpt = 40;

struct CliConfig {
  std::optional<std::string> alphabet_override;
  bool json_output = false;
  bool raw = false;
  std::size_t jobs = 1;
  std::optional<std::string> cache_path;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Alphabet alphabet_for(const CliConfig& config, const std::vector<std::string>& words) {
  if (config.alphabet_override) return Alphabet(*config.alphabet_override);
  std::string all;
  for (const auto& w : words) all += w;
  return Alphabet::infer(all);
}

void print_set(std::ostream& out, const WordSet& set, const Alphabet& alphabet) {
  for (const auto& w : set) out << alphabet.format(w) << '\n';
}

json set_json(const WordSet& set, const Alphabet& alphabet) {
  json arr = json::array();
  for (const auto& w : set) arr.push_back(alphabet.format(w));
  return arr;
}

void print_long_word(std::ostream& out, const std::string& text, bool raw) {
  if (raw || text.size() <= kTextLimit) {
    out << text << '\n';
    return;
  }
  out << "length " << text.size() << '\n'
      << "head " << text.substr(0, kExcerpt) << '\n'
      << "tail " << text.substr(text.size() - kExcerpt) << '\n';
}

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-') {
    throw UsageError(std::string(what) + " must be a nonnegative integer");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Palindromic richness toolkit", "richwords"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string alphabet_text;
  app.add_option("--alphabet", alphabet_text, "Ordered symbols; the first is 0, the second is 1");
  app.add_flag("--json", config.json_output, "Emit JSON");
  app.add_flag("--raw", config.raw, "Print long generated words in full");

  std::string word;
  std::string side = "right";
  std::size_t steps = 1;
  bool list = false;
  std::optional<std::size_t> budget;
  std::optional<std::string> tail;
  std::vector<std::string> words;
  std::string count_text;
  std::optional<std::string> out_file;

  auto* check = app.add_subcommand("check", "Richness verdict");
  check->add_option("word", word)->required();

  auto* palins = app.add_subcommand("palins", "Count distinct palindromic factors");
  palins->add_option("word", word)->required();
  palins->add_flag("--list", list, "List the nonempty palindromic factors");

  auto* extend = app.add_subcommand("extend", "Standard extension");
  extend->add_option("word", word)->required();
  extend->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  extend->add_option("--steps", steps);

  auto* flexed = app.add_subcommand("flexed", "Flexed points");
  flexed->add_option("word", word)->required();

  auto* omega_cmd = app.add_subcommand("omega", "Forced extension walk");
  omega_cmd->add_option("word", word)->required();
  omega_cmd->add_option("--budget", budget, "Step budget (default |w|)");

  auto* switches_cmd = app.add_subcommand("switches", "Switch factors");
  switches_cmd->add_option("word", word)->required();
  switches_cmd->add_option("--tail", tail, "Compute switchSuf(word, tail)");

  auto* swc_cmd = app.add_subcommand("swc", "Reduced switch palindromic closure of switches");
  swc_cmd->add_option("words", words)->required();

  auto* gen = app.add_subcommand("gen", "Generate g_n or h_n");
  gen->require_subcommand(1);
  auto* gen_g_cmd = gen->add_subcommand("g", "g_n");
  gen_g_cmd->add_option("n", count_text)->required();
  auto* gen_h_cmd = gen->add_subcommand("h", "h_n");
  gen_h_cmd->add_option("n", count_text)->required();
  gen_h_cmd->add_option("--out", out_file, "Write the word to this file");

  auto* verify = app.add_subcommand("verify", "Verify a construction");
  verify->require_subcommand(1);
  auto* verify_h_cmd = verify->add_subcommand("h", "Verify h_n");
  verify_h_cmd->add_option("n", count_text)->required();

  std::size_t q = 2;
  PhiOptions phi_options;
  bool serial = false;
  auto* phi_cmd = app.add_subcommand("phi", "Exhaustive phi(n)");
  phi_cmd->add_option("n", count_text)->required();
  phi_cmd->add_option("--q", q, "Alphabet size")->check(CLI::Range(2, 36));
  phi_cmd->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  phi_cmd->add_option("--cache", config.cache_path, "JSON-lines result cache");
  phi_cmd->add_flag("--canonical", phi_options.canonical, "One word per alphabet permutation");
  phi_cmd->add_option("--max-witnesses", phi_options.max_witnesses, "Keep at most this many witnesses");
  phi_cmd->add_flag("--serial", serial, "Use the serial reference search");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (!alphabet_text.empty()) config.alphabet_override = alphabet_text;

  try {
    if (*check) {
      const Alphabet a = alphabet_for(config, {word});
      const auto cert = is_rich(a.parse(word));
      if (config.json_output) {
        out << to_json(cert, a).dump() << '\n';
      } else {
        out << (cert.rich ? "rich" : "not rich") << '\n';
      }
      return cert.rich ? kOk : kNegative;
    }

    if (*palins) {
      const Alphabet a = alphabet_for(config, {word});
      const Word w = a.parse(word);
      const PalIndex index(a.size(), w);
      WordSet found;
      if (list) {
        for (std::size_t i = 0; i < w.size(); ++i) {
          for (std::size_t len = 1; i + len <= w.size(); ++len) {
            Word f = w.substr(i, len);
            if (is_palindrome(f)) found.insert(std::move(f));
          }
        }
      }
      if (config.json_output) {
        json j{{"word", word}, {"count", index.distinct_palindromes()}, {"rich", index.rich()}};
        if (list) j["palindromes"] = set_json(found, a);
        out << j.dump() << '\n';
      } else {
        out << index.distinct_palindromes() << '\n';
        print_set(out, found, a);
      }
      return kOk;
    }

    if (*extend) {
      const Alphabet a = alphabet_for(config, {word});
      const Word result = std_ext(a.parse(word), side == "left" ? Side::left : Side::right, steps);
      if (config.json_output) {
        out << json{{"word", word}, {"side", side}, {"steps", steps}, {"result", a.format(result)}}.dump()
            << '\n';
      } else {
        out << a.format(result) << '\n';
      }
      return kOk;
    }

    if (*flexed) {
      const Alphabet a = alphabet_for(config, {word});
      const WordSet points = flexed_points(a.parse(word));
      if (config.json_output) {
        out << json{{"word", word}, {"flexed_points", set_json(points, a)}}.dump() << '\n';
      } else {
        print_set(out, points, a);
      }
      return kOk;
    }

    if (*omega_cmd) {
      const Alphabet a = alphabet_for(config, {word});
      const auto trace = omega(a.parse(word), a, budget);
      if (config.json_output) {
        out << to_json(trace, a).dump() << '\n';
      } else {
        out << "omega " << (trace.omega ? std::to_string(*trace.omega) : std::string("exceeded")) << '\n';
        out << "path " << a.format(trace.path()) << '\n';
        if (trace.branch_witness) {
          out << "branch_letters " << a.symbol(trace.branch_witness->first) << ' '
              << a.symbol(trace.branch_witness->second) << '\n';
        }
      }
      return trace.omega ? kOk : kNegative;
    }

    if (*switches_cmd) {
      const Alphabet a = alphabet_for(config, {word, tail.value_or("")});
      const Word v = a.parse(word);
      const WordSet result = tail ? switch_suf(v, a.parse(*tail)).words() : switches_of(v).words();
      if (config.json_output) {
        json j{{"word", word}, {"switches", set_json(result, a)}};
        if (tail) j["tail"] = *tail;
        out << j.dump() << '\n';
      } else {
        print_set(out, result, a);
      }
      return kOk;
    }

    if (*swc_cmd) {
      const Alphabet a = alphabet_for(config, words);
      WordSet input;
      for (const auto& w : words) input.insert(a.parse(w));
      const WordSet result = swc_set(input);
      if (config.json_output) {
        out << json{{"switches", set_json(input, a)}, {"closures", set_json(result, a)}}.dump() << '\n';
      } else {
        print_set(out, result, a);
      }
      return kOk;
    }

    if (*gen_g_cmd) {
      const std::size_t n = parse_count(count_text, "n");
      const Alphabet a = config.alphabet_override ? Alphabet(*config.alphabet_override) : Alphabet::standard(2);
      const std::string text = a.format(gen_g(n));
      if (config.json_output) {
        json j{{"n", n}, {"length", text.size()}};
        if (config.raw || text.size() <= kInlineLimit) j["word"] = text;
        out << j.dump() << '\n';
      } else {
        print_long_word(out, text, config.raw);
      }
      return kOk;
    }

    if (*gen_h_cmd) {
      const std::size_t n = parse_count(count_text, "n");
      const Alphabet a = config.alphabet_override ? Alphabet(*config.alphabet_override) : Alphabet::standard(2);
      const auto report = gen_h(n, a);
      const std::string text = a.format(report.h_n);
      if (out_file) {
        std::ofstream file(*out_file);
        if (!(file << text << '\n')) throw std::runtime_error("cannot write " + *out_file);
      }
      if (config.json_output) {
        json j{{"n", n},
               {"q", a.size()},
               {"g_len", report.g_n.size()},
               {"h_len", report.h_n.size()},
               {"hbar_len", report.h_bar.size()},
               {"bound", report.bound}};
        if (out_file) {
          j["word_file"] = *out_file;
        } else if (config.raw || text.size() <= kInlineLimit) {
          j["word"] = text;
        }
        out << j.dump() << '\n';
      } else if (!out_file) {
        print_long_word(out, text, config.raw);
      } else {
        out << "length " << text.size() << '\n';
      }
      return kOk;
    }

    if (*verify_h_cmd) {
      const std::size_t n = parse_count(count_text, "n");
      const Alphabet a = config.alphabet_override ? Alphabet(*config.alphabet_override) : Alphabet::standard(2);
      const auto report = gen_h(n, a);
      const auto verdicts = verify_h(report);
      if (config.json_output) {
        out << to_json(report, verdicts).dump() << '\n';
      } else {
        out << "n " << report.n << '\n'
            << "q " << a.size() << '\n'
            << "g_len " << report.g_n.size() << '\n'
            << "h_len " << report.h_n.size() << '\n'
            << "hbar_len " << report.h_bar.size() << '\n'
            << "bound " << report.bound << '\n'
            << "rich " << std::boolalpha << verdicts.rich << '\n'
            << "unique_extension " << verdicts.unique_extension << '\n'
            << "bound_ok " << verdicts.bound_ok << '\n'
            << "ratio " << verdicts.ratio << '\n';
        for (const auto& f : verdicts.failures) err << "failed: " << f << '\n';
      }
      return verdicts.all_passed() ? kOk : kNegative;
    }

    if (*phi_cmd) {
      const std::size_t n = parse_count(count_text, "n");
      const Alphabet a = config.alphabet_override ? Alphabet(*config.alphabet_override) : Alphabet::standard(q);
      if (config.alphabet_override && phi_cmd->count("--q") > 0 && a.size() != q) {
        throw UsageError("--q does not match the size of --alphabet");
      }
      phi_options.shards = config.jobs;
      const bool cacheable = config.cache_path && !phi_options.canonical && phi_options.max_witnesses == 0;
      std::optional<PhiResult> result;
      if (cacheable) result = cache_lookup(n, a.size(), *config.cache_path);
      if (!result) {
        result = serial ? phi_serial(n, a, phi_options) : phi(n, a, phi_options);
        if (cacheable) cache_store(*result, *config.cache_path);
      }
      if (config.json_output) {
        out << to_json(*result).dump() << '\n';
      } else {
        out << "n " << result->n << '\n'
            << "q " << result->q << '\n'
            << "phi " << result->phi << '\n'
            << "enumerated " << result->enumerated << '\n'
            << "witnesses " << result->witnesses.size() << '\n';
        for (const auto& w : result->witnesses) out << w << '\n';
      }
      return kOk;
    }
  } catch (const FalsificationError& e) {
    err << "falsification: " << e.what() << '\n';
    return kNegative;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace richwords::cli
