#include "cyclemod/report.hpp"

#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

namespace cyclemod {

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

namespace {

// Flat JSON object with insertion-ordered keys, rendered one key per line.
class ObjectWriter {
 public:
  explicit ObjectWriter(int indent = 0) : indent_(indent) {}

  ObjectWriter& raw(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
    return *this;
  }
  ObjectWriter& integer(const std::string& key, u128 value) { return raw(key, cyclemod::to_string(value)); }
  ObjectWriter& real(const std::string& key, double value) { return raw(key, format_fixed6(value)); }
  ObjectWriter& boolean(const std::string& key, bool value) { return raw(key, value ? "true" : "false"); }
  ObjectWriter& text(const std::string& key, const std::string& value) {
    return raw(key, "\"" + value + "\"");
  }

  std::string str() const {
    const std::string pad(static_cast<std::size_t>(indent_), ' ');
    std::ostringstream os;
    os << "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      os << pad << "  \"" << fields_[i].first << "\": " << fields_[i].second;
      os << (i + 1 < fields_.size() ? ",\n" : "\n");
    }
    os << pad << "}";
    return os.str();
  }

 private:
  int indent_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

ObjectWriter timing_object(const TimingStats& s, int indent) {
  ObjectWriter w(indent);
  w.text("variant", to_string(s.variant))
      .integer("p", s.p)
      .integer("k_start", s.k_start)
      .integer("k_end", s.k_end)
      .integer("reps", s.reps)
      .integer("samples", s.samples)
      .real("mean_ns", s.mean_ns)
      .real("median_ns", s.median_ns)
      .real("max_jitter_ns", s.max_jitter_ns)
      .real("cv", s.cv)
      .integer("iter_min", s.iter_min)
      .integer("iter_max", s.iter_max);
  return w;
}

}  // namespace

std::string sequence_csv(const SeedSequence& seq) {
  std::ostringstream os;
  os << "k,a_k,d_k\n";
  for (const auto& r : seq.records) {
    os << r.k << ',' << to_string(r.a_k.value()) << ',' << to_string(r.d_k.value()) << '\n';
  }
  return os.str();
}

std::string sequence_json(const SeedSequence& seq) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < seq.records.size(); ++i) {
    const auto& r = seq.records[i];
    os << "  {\"k\": " << r.k << ", \"a_k\": " << to_string(r.a_k.value())
       << ", \"d_k\": " << to_string(r.d_k.value()) << "}";
    os << (i + 1 < seq.records.size() ? ",\n" : "\n");
  }
  os << "]\n";
  return os.str();
}

std::string ecs_json(const EcsReport& report, bool admitted, double threshold) {
  ObjectWriter w;
  w.integer("p", report.p)
      .integer("k_start", report.k_start)
      .integer("k_end", report.k_end)
      .integer("buckets", report.bucket_count)
      .real("cd", report.cd)
      .real("rud", report.rud)
      .real("mbi", report.mbi)
      .real("ecs", report.ecs)
      .boolean("admitted", admitted)
      .real("threshold", threshold);
  return w.str() + "\n";
}

std::string witness_json(const IdentityWitness& wit, bool verified) {
  ObjectWriter w;
  w.integer("p", wit.p)
      .integer("s", wit.s)
      .integer("A", wit.A)
      .integer("k", wit.k)
      .integer("n", wit.n)
      .integer("d", wit.d)
      .boolean("verified", verified);
  return w.str() + "\n";
}

std::string timing_json(const TimingStats& stats) { return timing_object(stats, 0).str() + "\n"; }

std::string comparison_json(const Comparison& cmp) {
  const std::string variants = "[\n    " + timing_object(cmp.euclid, 4).str() + ",\n    " +
                               timing_object(cmp.ct, 4).str() + "\n  ]";
  ObjectWriter w;
  w.integer("p", cmp.ct.p)
      .integer("k_start", cmp.ct.k_start)
      .integer("k_end", cmp.ct.k_end)
      .integer("reps", cmp.ct.reps)
      .raw("variants", variants)
      .boolean("ct_constant_steps", cmp.ct_constant_steps)
      .integer("euclid_step_spread", cmp.euclid_step_spread)
      .boolean("ct_cv_not_worse", cmp.ct_cv_not_worse);
  return w.str() + "\n";
}

}  // namespace cyclemod
