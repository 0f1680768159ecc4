#include "onion/scaling.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace onion {

double CounterReport::ratio(size_t i) const {
  const ScalingRow& r = rows.at(i);
  if (r.n < 2) throw std::invalid_argument("scaling ratio needs n >= 2");
  return static_cast<double>(r.counters.scanEvents) /
         (static_cast<double>(r.n) * std::log2(static_cast<double>(r.n)));
}

std::string CounterReport::table() const {
  std::ostringstream os;
  if (!label.empty()) os << "# " << label << "\n";
  os << "n,wall_ms,layers,peak_nodes,scan_events,evictions,promotions,ratio\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const ScalingRow& r = rows[i];
    os << r.n << ',' << r.wallMs << ',' << r.layers << ',' << r.peakNodes << ','
       << r.counters.scanEvents << ',' << r.counters.evictions << ','
       << r.counters.promotions << ',' << ratio(i) << "\n";
  }
  return os.str();
}

FitVerdict fitScaling(const CounterReport& report) {
  if (report.rows.size() < 4)
    throw std::invalid_argument("fitScaling needs at least 4 doubling sizes");
  FitVerdict v;
  for (size_t i = 0; i < report.rows.size(); ++i) {
    double r = report.ratio(i);
    if (i == 0) {
      v.minRatio = v.maxRatio = r;
    } else {
      v.minRatio = std::min(v.minRatio, r);
      v.maxRatio = std::max(v.maxRatio, r);
    }
  }
  v.pass = v.maxRatio <= 2.0 * v.minRatio;
  std::ostringstream os;
  os << (v.pass ? "PASS" : "FAIL") << " ratio range [" << v.minRatio << ", "
     << v.maxRatio << "] spread " << v.maxRatio / v.minRatio << " (limit 2)";
  v.text = os.str();
  return v;
}

}  // namespace onion
