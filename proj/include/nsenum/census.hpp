#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nsenum/enumerate.hpp"
#include "nsenum/integer.hpp"
#include "nsenum/triangulation.hpp"

namespace nsenum {

/// Largest size generate_closed() accepts unless told otherwise.
inline constexpr int kDefaultCensusLimit = 5;

struct CensusOptions {
  unsigned threads = 1;
  int size_limit = kDefaultCensusLimit;
};

/// Connected 4-regular multigraph on n nodes (loops count twice), given as a
/// list of (tet, face) slot pairs. One labelled representative per
/// isomorphism class.
struct FacePairing {
  int n = 0;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
};

std::vector<FacePairing> face_pairings(int n);

/// Every closed, connected, valid 3-manifold triangulation with exactly n
/// tetrahedra, once per isomorphism class, ordered by iso_signature.
std::vector<Triangulation> generate_closed(int n, const CensusOptions& options = {});

struct CensusRecord {
  int n = 0;
  std::size_t index = 0;
  std::string isosig;
  std::size_t sigma = 0;
};

struct Census {
  int n = 0;
  std::vector<Triangulation> triangulations;
  std::vector<CensusRecord> records;
};

Census run_census(int n, const CensusOptions& options = {});

struct CensusStats {
  int n = 0;
  std::size_t count = 0;
  Integer sum;
  Integer sum_squares;
  std::size_t min = 0;
  std::size_t max = 0;

  double mean() const;
  /// Population standard deviation.
  double stddev() const;
};

CensusStats census_stats(const std::vector<CensusRecord>& records, int n);
CensusStats census_stats(int n, const CensusOptions& options = {});

struct ConjectureLine {
  int n = 0;
  std::string check;
  bool skipped = false;
  bool holds = true;
  std::string detail;
};

struct ConjectureReport {
  std::vector<ConjectureLine> lines;
  bool all_hold() const;
};

/// `stats` must hold consecutive sizes 1..max_n in order.
ConjectureReport conjecture_checks(const std::vector<CensusStats>& stats);

void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records);
void write_stats_json(std::ostream& out, const CensusStats& stats);
void write_stats_text(std::ostream& out, const CensusStats& stats);

}  // namespace nsenum
