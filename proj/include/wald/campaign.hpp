#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wald/serialize.hpp"
#include "wald/waldspurger.hpp"

namespace wald {

struct SessionConfig {
  std::uint32_t q = 3;
  EtaleKind kind = EtaleKind::Split;
  int dmin = 0;
  int dmax = 3;
  /// Unset: each campaign picks its natural orbit range.
  std::optional<int> mmax;
  int D = 5;
  std::uint64_t seed = 1;
  int workers = 1;
  /// Number of random draws for randomized campaigns (0: campaign default).
  int samples = 0;
  ActionConvention convention = ActionConvention::Sublattice;
  /// Numeric character values and e1 for a single ke cell; symbolic runs
  /// draw them from the seed instead.
  CharacterParams params;
  Rational e1{1};

  /// Throws ConfigInvalid.
  void validate() const;
};

struct ReportRow {
  std::string campaign;
  json cell;
  json expected;
  json computed;
  std::string provenance;
  bool pass = false;
};

struct Report {
  std::string campaign;
  json header;
  std::vector<ReportRow> rows;

  bool all_pass() const;
  std::size_t failures() const;
  json summary() const;

  /// Header line, one line per row, summary line.
  void write_ndjson(std::ostream& os) const;
  /// campaign,cell,expected,computed,provenance,pass with JSON-valued fields.
  void write_csv(std::ostream& os) const;
};

const std::vector<std::string>& campaign_names();

/// Runs one campaign.  Rows are ordered by cell key and do not depend on the
/// worker count.  Throws ConfigInvalid for unknown names or bad configs;
/// errors raised inside a cell are rethrown with the cell coordinates.
Report run_campaign(const std::string& name, const SessionConfig& cfg);

}  // namespace wald
