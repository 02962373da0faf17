// mexlab: partition statistics, generating-function dumps, census tables and
// the cross-route identity suite, from the command line.
//
// Exit codes: 0 success / all identities pass, 1 verification failure,
// 2 usage error, 3 resource ceiling exceeded.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mexlab/bivariate.hpp"
#include "mexlab/census.hpp"
#include "mexlab/enumerate.hpp"
#include "mexlab/partition.hpp"
#include "mexlab/qseries.hpp"
#include "mexlab/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCeiling = 3;
constexpr long kSeriesOrderCap = 20000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CeilingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_enumeration_scale(long n) {
  long ceiling = mexlab::verify::resource_ceiling();
  if (n > ceiling) {
    throw CeilingError("n=" + std::to_string(n) + " exceeds the exhaustive-scan ceiling " +
                       std::to_string(ceiling) + " (override with MEXLAB_MAX_N)");
  }
}

void check_series_order(long order) {
  if (order < 0) throw UsageError("order must be >= 0");
  if (order > kSeriesOrderCap) {
    throw CeilingError("order " + std::to_string(order) + " exceeds the series ceiling " +
                       std::to_string(kSeriesOrderCap));
  }
}

std::vector<long> parse_long_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long v = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("could not parse " + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(what + " list is empty");
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// sequence/coefficient output
// ---------------------------------------------------------------------------

void emit_sequence(const std::string& name, const json& params, const std::vector<std::string>& values,
                   const std::string& format) {
  if (format == "human") {
    std::cout << join(values, ",") << "\n";
  } else if (format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << i << "," << values[i] << "\n";
  } else if (format == "bfile") {
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << i << " " << values[i] << "\n";
  } else if (format == "json") {
    json out;
    out["name"] = name;
    out["params"] = params;
    out["values"] = values;
    std::cout << out.dump() << "\n";
  } else {
    throw UsageError("unknown format: " + format);
  }
}

std::vector<std::string> series_values(const mexlab::TruncatedSeries& s) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int d = 0; d <= s.order(); ++d) out.push_back(s.coeff(d).get_str());
  return out;
}

std::vector<std::string> u64_values(const std::vector<std::uint64_t>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (std::uint64_t x : v) out.push_back(std::to_string(x));
  return out;
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

struct StatsOptions {
  std::string parts_text;
  std::optional<long> r;
  std::optional<long> t;
  std::string format = "human";
};

int cmd_stats(const StatsOptions& opt) {
  std::vector<long> values;
  try {
    values = parse_long_list(opt.parts_text, "parts");
  } catch (const UsageError&) {
    if (opt.parts_text.empty()) {
      values.clear();  // empty partition
    } else {
      throw;
    }
  }
  mexlab::Partition p;
  try {
    p = mexlab::Partition::from_parts(values);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (opt.r && *opt.r < 1) throw UsageError("--r must be >= 1");
  if (opt.t && *opt.t < 1) throw UsageError("--t must be >= 1");

  long stat_r = opt.r.value_or(2);
  long stat_t = opt.t.value_or(1);
  std::vector<long> mex_rs;
  if (opt.r) {
    mex_rs.push_back(*opt.r);
  } else {
    for (long r = 1; r <= p.largest_part() + 1; ++r) mex_rs.push_back(r);
  }
  auto extrema = p.repeating_part_extrema(stat_r);
  auto counters = p.part_counters(stat_r, 0);
  auto maex = p.chain_maex(stat_t);

  std::vector<std::string> conj;
  for (long v : p.conjugate().parts()) conj.push_back(std::to_string(v));

  if (opt.format == "json") {
    json out;
    out["partition"] = p.to_string();
    out["weight"] = p.weight();
    out["largest_part"] = p.largest_part();
    out["smallest_part"] = p.smallest_part();
    out["num_parts"] = p.num_parts();
    out["conjugate"] = p.conjugate().parts();
    out["gap_free"] = p.is_gap_free();
    json mex_obj;
    for (long r : mex_rs) mex_obj[std::to_string(r)] = p.chain_mex(r);
    out["chain_mex"] = mex_obj;
    out["chain_maex_t"] = stat_t;
    out["chain_maex"] = maex ? json(*maex) : json(nullptr);
    out["r"] = stat_r;
    out["largest_repeating"] = extrema.largest;
    out["smallest_repeating"] = extrema.smallest;
    out["multiples_of_r"] = counters.multiples_of_r;
    std::cout << out.dump() << "\n";
    return kExitOk;
  }

  std::cout << "partition: " << p.to_string() << "\n";
  std::cout << "weight: " << p.weight() << "\n";
  std::cout << "largest part: " << p.largest_part() << "\n";
  std::cout << "smallest part: " << p.smallest_part() << "\n";
  std::cout << "num parts: " << p.num_parts() << "\n";
  std::cout << "conjugate: " << join(conj, ",") << "\n";
  std::cout << "gap-free: " << (p.is_gap_free() ? "yes" : "no") << "\n";
  std::cout << "mex: " << p.chain_mex(1) << "\n";
  for (long r : mex_rs) {
    std::cout << "chain mex (r=" << r << "): " << p.chain_mex(r) << "\n";
  }
  std::cout << "chain maex (t=" << stat_t << "): ";
  if (maex) {
    std::cout << *maex << "\n";
  } else {
    std::cout << "absent\n";
  }
  std::cout << "largest repeating (r=" << stat_r << "): " << extrema.largest << "\n";
  std::cout << "smallest repeating (r=" << stat_r << "): " << extrema.smallest << "\n";
  std::cout << "multiples of " << stat_r << ": " << counters.multiples_of_r << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// seq
// ---------------------------------------------------------------------------

struct SeqOptions {
  std::string name;
  long max_n = 20;
  long r = 1;
  long m = 0;
  long j = 0;
  bool oracle = false;
  std::string format = "human";
};

int cmd_seq(const SeqOptions& opt) {
  if (opt.max_n < 0) throw UsageError("--max-n must be >= 0");
  json params;
  params["max_n"] = opt.max_n;
  params["oracle"] = opt.oracle;
  std::vector<std::string> values;
  if (opt.name == "p") {
    if (opt.oracle) {
      check_enumeration_scale(opt.max_n);
      std::vector<std::uint64_t> counts;
      for (long n = 0; n <= opt.max_n; ++n) counts.push_back(mexlab::count_partitions(n));
      values = u64_values(counts);
    } else {
      check_series_order(opt.max_n);
      values = series_values(mexlab::partition_gf(static_cast<int>(opt.max_n)));
    }
  } else if (opt.name == "sigma-rc-mex") {
    if (opt.r < 1) throw UsageError("--r must be >= 1");
    params["r"] = opt.r;
    if (opt.oracle) {
      check_enumeration_scale(opt.max_n);
      std::vector<std::uint64_t> sums;
      for (long n = 0; n <= opt.max_n; ++n) sums.push_back(mexlab::sigma_chain_mex(n, opt.r));
      values = u64_values(sums);
    } else {
      check_series_order(opt.max_n);
      values = series_values(mexlab::gf_sigma_rc_mex_rhs(opt.r, static_cast<int>(opt.max_n)));
    }
  } else if (opt.name == "d2") {
    if (opt.oracle) {
      check_enumeration_scale(opt.max_n);
      values = u64_values(mexlab::count_colored_upto(opt.max_n, mexlab::two_colored_distinct()));
    } else {
      check_series_order(opt.max_n);
      values = series_values(mexlab::gf_sigma_mex(static_cast<int>(opt.max_n)));
    }
  } else if (opt.name == "p-colored") {
    if (opt.m < 2) throw UsageError("p-colored needs --m >= 2 (the modulus)");
    if (opt.j < 1 || opt.j >= opt.m) throw UsageError("p-colored needs --j in [1, m-1]");
    params["m"] = opt.m;
    params["j"] = opt.j;
    if (opt.oracle) {
      check_enumeration_scale(opt.max_n);
      values = u64_values(
          mexlab::count_colored_upto(opt.max_n, mexlab::two_colored_regular(opt.m, opt.j)));
    } else {
      check_series_order(opt.max_n);
      values =
          series_values(mexlab::gf_corollary_term(opt.m - 1, opt.j, static_cast<int>(opt.max_n)));
    }
  } else if (opt.name == "q-count") {
    if (opt.r < 1) throw UsageError("q-count needs --r >= 1");
    if (opt.j < 0) throw UsageError("q-count needs --j >= 0");
    params["r"] = opt.r;
    params["j"] = opt.j;
    if (opt.oracle) {
      check_enumeration_scale(opt.max_n);
      std::vector<std::uint64_t> counts;
      for (long n = 0; n <= opt.max_n; ++n) {
        std::uint64_t c = 0;
        mexlab::PartitionStream stream(n);
        while (stream.next()) {
          if (stream.partition().repeating_part_extrema(opt.r).largest == opt.j) ++c;
        }
        counts.push_back(c);
      }
      values = u64_values(counts);
    } else {
      check_series_order(opt.max_n);
      values =
          series_values(mexlab::gf_largest_repeating(opt.r, opt.j, static_cast<int>(opt.max_n)));
    }
  } else {
    throw UsageError("unknown sequence: " + opt.name);
  }
  emit_sequence(opt.name, params, values, opt.format);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gf
// ---------------------------------------------------------------------------

struct GfOptions {
  std::string name;
  long order = 20;
  long r = 1;
  long m = 1;
  long j = 0;
  long c = 1;
  long d = 1;
  long terms = 0;
  std::string format = "human";
};

int cmd_gf(const GfOptions& opt) {
  check_series_order(opt.order);
  int order = static_cast<int>(opt.order);
  json params;
  params["order"] = opt.order;
  mexlab::TruncatedSeries series;
  try {
    if (opt.name == "partition") {
      series = mexlab::partition_gf(order);
    } else if (opt.name == "euler-product") {
      series = mexlab::pochhammer_inf(1, 1, order);
    } else if (opt.name == "sigma-mex") {
      series = mexlab::gf_sigma_mex(order);
    } else if (opt.name == "sigma-rc-mex") {
      params["r"] = opt.r;
      series = mexlab::gf_sigma_rc_mex_rhs(opt.r, order);
    } else if (opt.name == "corollary-term") {
      params["r"] = opt.r;
      params["m"] = opt.m;
      series = mexlab::gf_corollary_term(opt.r, opt.m, order);
    } else if (opt.name == "largest-repeating") {
      params["r"] = opt.r;
      params["j"] = opt.j;
      series = mexlab::gf_largest_repeating(opt.r, opt.j, order);
    } else if (opt.name == "pochhammer-inf") {
      params["c"] = opt.c;
      params["d"] = opt.d;
      series = mexlab::pochhammer_inf(opt.c, opt.d, order);
    } else if (opt.name == "pochhammer-inv-inf") {
      params["c"] = opt.c;
      params["d"] = opt.d;
      series = mexlab::pochhammer_inv_inf(opt.c, opt.d, order);
    } else if (opt.name == "pochhammer-fin") {
      params["c"] = opt.c;
      params["d"] = opt.d;
      params["terms"] = opt.terms;
      series = mexlab::pochhammer_fin(opt.c, opt.d, opt.terms, order);
    } else {
      throw UsageError("unknown builder: " + opt.name);
    }
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  emit_sequence(opt.name, params, series_values(series), opt.format);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct TableOptions {
  std::string kind;
  long n = 0;
  long r = 0;
  std::optional<long> j;
  bool list_partitions = false;
  std::string domain = "exists";
  std::string window = "positive";
  std::string format = "human";
};

using CellListing = std::map<long, std::vector<std::string>>;

void print_columns_human(const std::vector<std::string>& labels,
                         const std::vector<std::vector<std::string>>& columns) {
  std::vector<std::size_t> width(labels.size());
  std::size_t rows = 0;
  for (std::size_t c = 0; c < labels.size(); ++c) {
    width[c] = labels[c].size();
    for (const auto& cell : columns[c]) width[c] = std::max(width[c], cell.size());
    rows = std::max(rows, columns[c].size());
  }
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < labels.size(); ++c) {
      std::string cell = c < cells.size() ? cells[c] : "";
      std::cout << cell;
      if (c + 1 < labels.size()) std::cout << std::string(width[c] - cell.size() + 3, ' ');
    }
    std::cout << "\n";
  };
  emit_row(labels);
  std::vector<std::string> dashes;
  for (std::size_t c = 0; c < labels.size(); ++c) dashes.push_back(std::string(width[c], '-'));
  emit_row(dashes);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::string> cells;
    for (std::size_t c = 0; c < labels.size(); ++c) {
      cells.push_back(i < columns[c].size() ? columns[c][i] : "");
    }
    emit_row(cells);
  }
}

int cmd_table(const TableOptions& opt) {
  if (opt.n < 0) throw UsageError("--n must be >= 0");
  check_enumeration_scale(opt.n);

  if (opt.kind == "three-way") {
    long r = opt.r > 0 ? opt.r : 2;
    if (r < 2) throw UsageError("three-way needs --r >= 2");
    mexlab::ThreeWayCensus census = mexlab::three_way_census(opt.n, r);
    CellListing beyond_list, mult_list, rep_list;
    if (opt.list_partitions) {
      mexlab::PartitionStream stream(opt.n);
      while (stream.next()) {
        mexlab::Partition p = stream.partition();
        long jb = 0;
        long mex = p.chain_mex(r - 1);
        for (const auto& e : p.frequencies()) {
          if (e.value > mex) jb += e.count;
        }
        beyond_list[jb].push_back(p.to_string());
        mult_list[p.part_counters(r, 0).multiples_of_r].push_back(p.to_string());
        rep_list[p.repeating_part_extrema(r).largest].push_back(p.to_string());
      }
    }
    long j_hi = std::max({census.multiples.max_key(0), census.largest_repeating.max_key(0),
                          census.beyond_chain_mex.max_key(0), 0L});
    long j_lo = 0;
    if (opt.j) j_lo = j_hi = *opt.j;
    auto mex_label = [&](long j) {
      std::string parts = (j == 1) ? "part" : "parts";
      return std::to_string(j) + " " + parts +
             ((r == 2) ? " > mex" : " > " + std::to_string(r - 1) + "-chain mex");
    };
    auto mult_label = [&](long j) {
      if (r == 2) return std::to_string(j) + ((j == 1) ? " even part" : " even parts");
      return std::to_string(j) + ((j == 1) ? " multiple of " : " multiples of ") + std::to_string(r);
    };
    auto rep_label = [&](long j) {
      std::string stat = (r == 2) ? "largest repeating part " : "largest " + std::to_string(r) + "-repeating part ";
      return stat + std::to_string(j);
    };
    if (opt.format == "json") {
      json cells = json::array();
      for (long j = j_lo; j <= j_hi; ++j) {
        json cell;
        cell["j"] = j;
        cell["beyond_chain_mex"] = census.beyond_chain_mex.at(j);
        cell["multiples"] = census.multiples.at(j);
        cell["largest_repeating"] = census.largest_repeating.at(j);
        if (opt.list_partitions) {
          cell["partitions_beyond_chain_mex"] = beyond_list[j];
          cell["partitions_multiples"] = mult_list[j];
          cell["partitions_largest_repeating"] = rep_list[j];
        }
        cells.push_back(cell);
      }
      json out;
      out["kind"] = "three-way";
      out["n"] = opt.n;
      out["r"] = r;
      out["cells"] = cells;
      std::cout << out.dump() << "\n";
    } else if (opt.format == "csv") {
      std::cout << "n,j,beyond_chain_mex,multiples,largest_repeating\n";
      for (long j = j_lo; j <= j_hi; ++j) {
        std::cout << opt.n << "," << j << "," << census.beyond_chain_mex.at(j) << ","
                  << census.multiples.at(j) << "," << census.largest_repeating.at(j) << "\n";
      }
    } else {
      std::cout << "n = " << opt.n << ", r = " << r << "\n";
      for (long j = j_lo; j <= j_hi; ++j) {
        std::cout << "j = " << j << ": counts (" << census.beyond_chain_mex.at(j) << ", "
                  << census.multiples.at(j) << ", " << census.largest_repeating.at(j) << ")\n";
        if (opt.list_partitions) {
          print_columns_human({mex_label(j), mult_label(j), rep_label(j)},
                              {beyond_list[j], mult_list[j], rep_list[j]});
        }
      }
    }
    return kExitOk;
  }

  if (opt.kind == "refine") {
    long r = opt.r > 0 ? opt.r : 1;
    mexlab::RefineCensus census = mexlab::refine_census(opt.n, r);
    if (opt.format == "json") {
      json cells = json::array();
      for (const auto& [key, count] : census.table_a.cells) {
        json cell;
        cell["j"] = key[0];
        cell["k"] = key[1];
        cell["table_a"] = count;
        cell["table_b"] = census.table_b.at(key[0], key[1]);
        cells.push_back(cell);
      }
      for (const auto& [key, count] : census.table_b.cells) {
        if (census.table_a.at(key[0], key[1]) == 0) {
          json cell;
          cell["j"] = key[0];
          cell["k"] = key[1];
          cell["table_a"] = 0;
          cell["table_b"] = count;
          cells.push_back(cell);
        }
      }
      json out;
      out["kind"] = "refine";
      out["n"] = opt.n;
      out["r"] = r;
      out["cells"] = cells;
      std::cout << out.dump() << "\n";
    } else if (opt.format == "csv") {
      std::cout << "n,j,k,table_a,table_b\n";
      for (const auto& [key, count] : census.table_a.cells) {
        if (opt.j && key[0] != *opt.j) continue;
        std::cout << opt.n << "," << key[0] << "," << key[1] << "," << count << ","
                  << census.table_b.at(key[0], key[1]) << "\n";
      }
    } else {
      std::cout << "n = " << opt.n << ", r = " << r << " (j parts > r-chain mex k | largest (r+1)-repeating j, k-1 parts > j)\n";
      for (const auto& [key, count] : census.table_a.cells) {
        if (opt.j && key[0] != *opt.j) continue;
        std::cout << "j = " << key[0] << ", k = " << key[1] << ": " << count << " | "
                  << census.table_b.at(key[0], key[1]) << "\n";
      }
    }
    return kExitOk;
  }

  if (opt.kind == "franklin") {
    long r = opt.r > 0 ? opt.r : 2;
    if (r < 2) throw UsageError("franklin needs --r >= 2");
    mexlab::FranklinGlaisherCensus census = mexlab::franklin_glaisher_census(opt.n, r);
    long j_hi = std::max({census.divisible_side.max_key(0), census.repeating_side.max_key(0), 0L});
    long j_lo = 0;
    if (opt.j) j_lo = j_hi = *opt.j;
    if (opt.format == "json") {
      json cells = json::array();
      for (long j = j_lo; j <= j_hi; ++j) {
        json cell;
        cell["j"] = j;
        cell["divisible_values"] = census.divisible_side.at(j);
        cell["repeating_values"] = census.repeating_side.at(j);
        cells.push_back(cell);
      }
      json out;
      out["kind"] = "franklin";
      out["n"] = opt.n;
      out["r"] = r;
      out["cells"] = cells;
      out["regular_count"] = census.regular_count;
      out["frequency_bounded_count"] = census.frequency_bounded_count;
      std::cout << out.dump() << "\n";
    } else if (opt.format == "csv") {
      std::cout << "n,j,divisible_values,repeating_values\n";
      for (long j = j_lo; j <= j_hi; ++j) {
        std::cout << opt.n << "," << j << "," << census.divisible_side.at(j) << ","
                  << census.repeating_side.at(j) << "\n";
      }
    } else {
      std::cout << "n = " << opt.n << ", r = " << r << "\n";
      for (long j = j_lo; j <= j_hi; ++j) {
        std::cout << "j = " << j << ": " << census.divisible_side.at(j) << " with j values divisible by r | "
                  << census.repeating_side.at(j) << " with j values repeating >= r times\n";
      }
      std::cout << "scalars: " << census.regular_count << " r-regular | "
                << census.frequency_bounded_count << " with all frequencies < r\n";
    }
    return kExitOk;
  }

  if (opt.kind == "chain-maex") {
    long r = opt.r > 0 ? opt.r : 2;
    if (r < 2) throw UsageError("chain-maex needs --r >= 2");
    mexlab::MaexDomain domain;
    if (opt.domain == "exists") {
      domain = mexlab::MaexDomain::maex_exists;
    } else if (opt.domain == "literal") {
      domain = mexlab::MaexDomain::nongapfree_literal;
    } else {
      throw UsageError("--domain must be 'exists' or 'literal'");
    }
    mexlab::MaexWindow window;
    if (opt.window == "positive") {
      window = mexlab::MaexWindow::positive_only;
    } else if (opt.window == "below-one") {
      window = mexlab::MaexWindow::allow_below_one;
    } else {
      throw UsageError("--window must be 'positive' or 'below-one'");
    }
    mexlab::ChainMaexCensus census = mexlab::chain_maex_census(opt.n, r, domain, window);
    long j_hi = std::max({census.beyond_maex.max_key(0), census.smallest_repeating.max_key(0), 1L});
    long j_lo = 1;
    if (opt.j) j_lo = j_hi = *opt.j;
    if (opt.format == "json") {
      json cells = json::array();
      for (long j = j_lo; j <= j_hi; ++j) {
        json cell;
        cell["j"] = j;
        cell["beyond_maex"] = census.beyond_maex.at(j);
        cell["smallest_repeating"] = census.smallest_repeating.at(j);
        cells.push_back(cell);
      }
      json out;
      out["kind"] = "chain-maex";
      out["n"] = opt.n;
      out["r"] = r;
      out["domain"] = mexlab::to_string(domain);
      out["window"] = mexlab::to_string(window);
      out["cells"] = cells;
      std::cout << out.dump() << "\n";
    } else if (opt.format == "csv") {
      std::cout << "n,j,beyond_maex,smallest_repeating\n";
      for (long j = j_lo; j <= j_hi; ++j) {
        std::cout << opt.n << "," << j << "," << census.beyond_maex.at(j) << ","
                  << census.smallest_repeating.at(j) << "\n";
      }
    } else {
      std::cout << "n = " << opt.n << ", r = " << r << " (" << mexlab::to_string(domain) << ", "
                << mexlab::to_string(window) << ")\n";
      for (long j = j_lo; j <= j_hi; ++j) {
        std::cout << "j = " << j << ": " << census.beyond_maex.at(j)
                  << " beyond the (r-1)-chain maex | " << census.smallest_repeating.at(j)
                  << " with smallest r-repeating part j\n";
      }
    }
    return kExitOk;
  }

  if (opt.kind == "alpha") {
    mexlab::CountTable census = mexlab::alpha_census(opt.n);
    long j_hi = std::max(census.max_key(0), 0L);
    long j_lo = 0;
    if (opt.j) j_lo = j_hi = *opt.j;
    if (opt.format == "json") {
      json cells = json::array();
      for (long j = j_lo; j <= j_hi; ++j) {
        json cell;
        cell["j"] = j;
        cell["alpha"] = census.at(j);
        cells.push_back(cell);
      }
      json out;
      out["kind"] = "alpha";
      out["n"] = opt.n;
      out["cells"] = cells;
      std::cout << out.dump() << "\n";
    } else if (opt.format == "csv") {
      std::cout << "n,j,alpha\n";
      for (long j = j_lo; j <= j_hi; ++j) {
        std::cout << opt.n << "," << j << "," << census.at(j) << "\n";
      }
    } else {
      std::cout << "n = " << opt.n << "\n";
      for (long j = j_lo; j <= j_hi; ++j) {
        std::cout << "j = " << j << ": " << census.at(j) << "\n";
      }
    }
    return kExitOk;
  }

  throw UsageError("unknown table kind: " + opt.kind);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::vector<std::string> ids;
  std::string suite;
  bool list = false;
  long max_n = 40;
  std::string r_text = "1,2,3,4";
  long max_j = -1;
  long order = 120;
  std::string zexp_text = "1,2,3";
  long max_m = 10;
  bool timings = false;
  bool override_ceiling = false;
  bool self_test_corrupt = false;
  std::string format = "human";
};

int cmd_verify(const VerifyOptions& opt) {
  if (opt.list) {
    for (const auto& id : mexlab::verify::registered_identities()) {
      std::cout << id << ": " << mexlab::verify::identity_description(id) << "\n";
    }
    return kExitOk;
  }
  mexlab::verify::Params params;
  params.max_n = opt.max_n;
  params.r_values = parse_long_list(opt.r_text, "--r");
  params.max_j = opt.max_j;
  if (opt.order < 0 || opt.order > kSeriesOrderCap) {
    throw CeilingError("order " + std::to_string(opt.order) + " exceeds the series ceiling");
  }
  params.order = static_cast<int>(opt.order);
  params.zexp_values = parse_long_list(opt.zexp_text, "--zexp");
  params.max_m = opt.max_m;
  params.with_timings = opt.timings;
  params.override_ceiling = opt.override_ceiling;
  params.inject_mismatch = opt.self_test_corrupt;

  std::vector<mexlab::verify::IdentityReport> reports;
  try {
    if (!opt.suite.empty()) {
      if (opt.suite != "all") throw UsageError("--suite only supports 'all'");
      reports = mexlab::verify::run_suite(params);
    } else if (!opt.ids.empty()) {
      for (const auto& id : opt.ids) reports.push_back(mexlab::verify::verify_identity(id, params));
    } else {
      throw UsageError("verify needs identity ids, --suite all, or --list");
    }
  } catch (const mexlab::verify::UnknownIdentityError& e) {
    throw UsageError(e.what());
  } catch (const mexlab::verify::ResourceCeilingError& e) {
    throw CeilingError(e.what());
  }

  bool all_pass = true;
  for (const auto& rep : reports) all_pass = all_pass && rep.pass;
  if (opt.format == "json") {
    std::cout << mexlab::verify::suite_to_json(reports) << "\n";
  } else {
    for (const auto& rep : reports) std::cout << mexlab::verify::report_to_human(rep);
    std::cout << (all_pass ? "all identities pass\n" : "FAILURES present\n");
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partition statistics, q-series builders and cross-route identity checks"};
  app.require_subcommand(1);

  StatsOptions stats_opt;
  CLI::App* stats = app.add_subcommand("stats", "statistics of one partition");
  stats->add_option("--parts", stats_opt.parts_text, "comma-separated positive parts")->required();
  long stats_r = 0, stats_t = 0;
  CLI::Option* stats_r_opt = stats->add_option("--r", stats_r, "chain length for mex/repeating stats");
  CLI::Option* stats_t_opt = stats->add_option("--t", stats_t, "chain length for the maex");
  stats->add_option("--format", stats_opt.format)->check(CLI::IsMember({"human", "json"}));

  SeqOptions seq_opt;
  CLI::App* seq = app.add_subcommand("seq", "sequence dump (a(0)..a(max_n))");
  seq->add_option("name", seq_opt.name, "p | sigma-rc-mex | d2 | p-colored | q-count")->required();
  seq->add_option("--max-n", seq_opt.max_n, "last index; bfile rows start at n=0")->required();
  seq->add_option("--r", seq_opt.r);
  seq->add_option("--m", seq_opt.m, "modulus for p-colored");
  seq->add_option("--j", seq_opt.j, "residue / statistic value");
  seq->add_flag("--oracle", seq_opt.oracle, "force the enumeration route");
  seq->add_option("--format", seq_opt.format)->check(CLI::IsMember({"human", "csv", "json", "bfile"}));

  TableOptions table_opt;
  CLI::App* table = app.add_subcommand("table", "census cross-tabs for one n");
  table->add_option("kind", table_opt.kind, "three-way | refine | franklin | chain-maex | alpha")
      ->required();
  table->add_option("--n", table_opt.n)->required();
  table->add_option("--r", table_opt.r);
  long table_j = 0;
  CLI::Option* table_j_opt = table->add_option("--j", table_j, "restrict to one j");
  table->add_flag("--list-partitions", table_opt.list_partitions,
                  "list the witness partitions per cell");
  table->add_option("--domain", table_opt.domain, "chain-maex: exists | literal");
  table->add_option("--window", table_opt.window, "chain-maex: positive | below-one");
  table->add_option("--format", table_opt.format)->check(CLI::IsMember({"human", "csv", "json"}));

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("ids", verify_opt.ids, "identity ids (see --list)");
  verify->add_option("--suite", verify_opt.suite, "'all' runs the whole registry");
  verify->add_flag("--list", verify_opt.list, "list registered identities");
  verify->add_option("--max-n", verify_opt.max_n, "exhaustive-scan bound (ceiling-limited)");
  verify->add_option("--r", verify_opt.r_text, "comma-separated r values");
  verify->add_option("--max-j", verify_opt.max_j, "-1 checks every j");
  verify->add_option("--order", verify_opt.order, "series truncation order");
  verify->add_option("--zexp", verify_opt.zexp_text, "comma-separated exponents for qbinom-a0");
  verify->add_option("--max-m", verify_opt.max_m, "depth for inner-sum-collapse");
  verify->add_flag("--timings", verify_opt.timings,
                   "fill duration_ms (output is no longer byte-reproducible)");
  verify->add_flag("--override-ceiling", verify_opt.override_ceiling,
                   "bypass the exhaustive-scan ceiling");
  verify->add_flag("--self-test-corrupt", verify_opt.self_test_corrupt,
                   "testing aid: corrupt one series to force a witnessed failure");
  verify->add_option("--format", verify_opt.format)->check(CLI::IsMember({"human", "json"}));

  GfOptions gf_opt;
  CLI::App* gf = app.add_subcommand("gf", "coefficient dump of a series builder");
  gf->add_option("name", gf_opt.name,
                 "partition | euler-product | sigma-mex | sigma-rc-mex | corollary-term | "
                 "largest-repeating | pochhammer-inf | pochhammer-inv-inf | pochhammer-fin")
      ->required();
  gf->add_option("--order", gf_opt.order)->required();
  gf->add_option("--r", gf_opt.r);
  gf->add_option("--m", gf_opt.m);
  gf->add_option("--j", gf_opt.j);
  gf->add_option("--c", gf_opt.c, "pochhammer offset exponent");
  gf->add_option("--d", gf_opt.d, "pochhammer step exponent");
  gf->add_option("--terms", gf_opt.terms, "pochhammer-fin factor count");
  gf->add_option("--format", gf_opt.format)->check(CLI::IsMember({"human", "csv", "json", "bfile"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(stats)) {
      if (*stats_r_opt) stats_opt.r = stats_r;
      if (*stats_t_opt) stats_opt.t = stats_t;
      return cmd_stats(stats_opt);
    }
    if (app.got_subcommand(seq)) return cmd_seq(seq_opt);
    if (app.got_subcommand(table)) {
      if (*table_j_opt) table_opt.j = table_j;
      return cmd_table(table_opt);
    }
    if (app.got_subcommand(verify)) return cmd_verify(verify_opt);
    if (app.got_subcommand(gf)) return cmd_gf(gf_opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CeilingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCeiling;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
