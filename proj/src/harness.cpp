#include "monlab/harness.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "monlab/betti.hpp"
#include "monlab/bounds.hpp"
#include "monlab/error.hpp"
#include "monlab/linearity.hpp"

namespace monlab {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

PureIdealSpace::PureIdealSpace(int n, int d) : n_(n), d_(d) {
  if (d < 1 || d > n) throw InputError("enumeration needs 1 <= d <= n");
  if (n > kMaxAmbient) throw InputError("enumeration needs n <= 64");
  const auto count = binomial(n, d);
  if (count > 63) {
    throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(d) + ") = " + std::to_string(count) +
                        " monomials exceeds the 63-bit subset index");
  }
  monomials_ = squarefree_of_degree(n, d);
}

Ideal PureIdealSpace::ideal_at(SubsetIndex index) const {
  if (index == 0 || index >= end_index()) throw InputError("subset index out of range");
  std::vector<Mask> gens;
  for (SubsetIndex rest = index; rest; rest &= rest - 1) gens.push_back(monomials_[__builtin_ctzll(rest)]);
  return minimal_generators(n_, gens);
}

SubsetIndex PureIdealSpace::index_of(const Ideal& ideal) const {
  SubsetIndex index = 0;
  for (const auto& g : ideal.generators()) {
    const auto it = std::lower_bound(monomials_.begin(), monomials_.end(), g.mask());
    if (it == monomials_.end() || *it != g.mask()) throw InputError("ideal is not in this enumeration space");
    index |= SubsetIndex{1} << (it - monomials_.begin());
  }
  return index;
}

void enumerate_pure_ideals(int n, int d, const std::function<void(SubsetIndex, const Ideal&)>& visitor) {
  const PureIdealSpace space(n, d);
  for (SubsetIndex s = 1; s < space.end_index(); ++s) visitor(s, space.ideal_at(s));
}

SymmetryMode parse_symmetry(const std::string& text) {
  if (text == "off") return SymmetryMode::Off;
  if (text == "dedup") return SymmetryMode::Dedup;
  if (text == "skip") return SymmetryMode::Skip;
  throw InputError("symmetry must be off, dedup or skip");
}

std::string to_string(SymmetryMode mode) {
  switch (mode) {
    case SymmetryMode::Off: return "off";
    case SymmetryMode::Dedup: return "dedup";
    case SymmetryMode::Skip: return "skip";
  }
  return "off";
}

SymmetryCanon::SymmetryCanon(const PureIdealSpace& space) : width_(space.monomial_count()) {
  if (space.n() > 7) throw InputError("symmetry reduction supports n <= 7");
  std::vector<int> perm(space.n());
  std::iota(perm.begin(), perm.end(), 0);
  const auto& monomials = space.monomials();
  do {
    std::vector<std::uint8_t> image(width_);
    for (std::size_t b = 0; b < width_; ++b) {
      Mask mapped = 0;
      for (Mask rest = monomials[b]; rest; rest &= rest - 1) mapped |= Mask{1} << perm[__builtin_ctzll(rest)];
      image[b] = static_cast<std::uint8_t>(std::lower_bound(monomials.begin(), monomials.end(), mapped) -
                                           monomials.begin());
    }
    images_.push_back(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

SubsetIndex SymmetryCanon::canonical(SubsetIndex index) const {
  SubsetIndex best = index;
  for (const auto& image : images_) {
    SubsetIndex mapped = 0;
    for (SubsetIndex rest = index; rest; rest &= rest - 1) mapped |= SubsetIndex{1} << image[__builtin_ctzll(rest)];
    best = std::min(best, mapped);
  }
  return best;
}

nlohmann::json ideal_to_json(const Ideal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) gens.push_back(format_monomial(g));
  return gens;
}

Ideal ideal_from_json(int ambient, const nlohmann::json& gens) {
  std::vector<Monomial> monomials;
  for (const auto& g : gens) monomials.push_back(parse_monomial(ambient, g.get<std::string>()));
  if (monomials.empty()) return Ideal::zero(ambient);
  return minimal_generators(monomials);
}

nlohmann::json EnumerationSummary::to_json() const {
  nlohmann::json extremal_json = nlohmann::json::array();
  for (const auto& i : extremal) extremal_json.push_back(ideal_to_json(i));
  nlohmann::json violations_json = nlohmann::json::array();
  for (const auto& i : violations) violations_json.push_back(ideal_to_json(i));
  nlohmann::json out{
      {"n", n},
      {"d", d},
      {"field", field},
      {"symmetry", monlab::to_string(symmetry)},
      {"total_ideals", total_ideals},
      {"n2_count", n2_count},
      {"max_reg", max_reg},
      {"bound", regularity_bound(n, d)},
      {"extremal_count", extremal_count},
      {"extremal", extremal_json},
      {"violations", violations_json},
      {"cursor", cursor},
      {"complete", complete},
  };
  if (symmetry == SymmetryMode::Skip) out["skipped"] = skipped;
  if (n2_classes) out["n2_classes"] = *n2_classes;
  return out;
}

void write_results_jsonl(const EnumerationSummary& summary, std::ostream& out) {
  for (const auto& i : summary.extremal) {
    out << nlohmann::json{{"type", "extremal"}, {"reg", summary.max_reg}, {"ideal", ideal_to_json(i)}}.dump() << '\n';
  }
  for (const auto& i : summary.violations) {
    out << nlohmann::json{{"type", "violation"}, {"ideal", ideal_to_json(i)}}.dump() << '\n';
  }
  nlohmann::json s = summary.to_json();
  s["type"] = "summary";
  out << s.dump() << '\n';
}

namespace {

struct ChunkResult {
  std::uint64_t total = 0;
  std::uint64_t n2 = 0;
  std::uint64_t skipped = 0;
  int max_reg = -1;
  std::uint64_t extremal_count = 0;
  std::vector<SubsetIndex> extremal;  // index order; capped
  std::vector<SubsetIndex> violations;
  std::set<SubsetIndex> classes;      // canonical forms of N2 ideals
  std::set<SubsetIndex> extremal_classes;
};

// Running state of a campaign, persisted in checkpoints.
struct CampaignState {
  EnumerationSummary summary;
  std::vector<SubsetIndex> extremal;
  std::vector<SubsetIndex> violations;
  std::set<SubsetIndex> classes;
  std::set<SubsetIndex> extremal_classes;
};

class Campaign {
 public:
  Campaign(const PureIdealSpace& space, const FieldSpec& field, const VerifyOptions& options)
      : space_(space), field_(field), options_(options), bound_(regularity_bound(space.n(), space.d())) {
    if (options.symmetry != SymmetryMode::Off) canon_.emplace(space);
    if (options.chunk_size == 0) throw InputError("chunk size must be positive");
  }

  ChunkResult run_chunk(SubsetIndex begin, SubsetIndex end) const {
    ChunkResult r;
    const bool dedup = options_.symmetry == SymmetryMode::Dedup;
    for (SubsetIndex s = begin; s < end; ++s) {
      ++r.total;
      SubsetIndex canonical = s;
      if (canon_) canonical = canon_->canonical(s);
      if (options_.symmetry == SymmetryMode::Skip && canonical != s) {
        ++r.skipped;
        continue;
      }
      const Ideal ideal = space_.ideal_at(s);
      if (!is_n2_graph(ideal).holds) continue;
      ++r.n2;
      if (canon_) r.classes.insert(canonical);
      const int reg = regularity(ideal, field_);
      if (reg > bound_) r.violations.push_back(s);
      if (reg > r.max_reg) {
        r.max_reg = reg;
        r.extremal_count = 0;
        r.extremal.clear();
        r.extremal_classes.clear();
      }
      if (reg == r.max_reg) {
        ++r.extremal_count;
        if (dedup) {
          if (r.extremal_classes.insert(canonical).second && r.extremal.size() < options_.extremal_limit) {
            r.extremal.push_back(s);
          }
        } else if (r.extremal.size() < options_.extremal_limit) {
          r.extremal.push_back(s);
        }
      }
    }
    return r;
  }

  void merge(CampaignState& st, ChunkResult&& r) const {
    auto& sum = st.summary;
    sum.total_ideals += r.total;
    sum.n2_count += r.n2;
    sum.skipped += r.skipped;
    st.violations.insert(st.violations.end(), r.violations.begin(), r.violations.end());
    st.classes.merge(r.classes);
    if (r.max_reg > sum.max_reg) {
      sum.max_reg = r.max_reg;
      sum.extremal_count = 0;
      st.extremal.clear();
      st.extremal_classes.clear();
    }
    if (r.max_reg == sum.max_reg && r.max_reg >= 0) {
      sum.extremal_count += r.extremal_count;
      const bool dedup = options_.symmetry == SymmetryMode::Dedup;
      for (SubsetIndex s : r.extremal) {
        if (st.extremal.size() >= options_.extremal_limit) break;
        if (dedup && !st.extremal_classes.insert(canon_->canonical(s)).second) continue;
        st.extremal.push_back(s);
      }
    }
  }

  void finalize(CampaignState& st) const {
    auto& sum = st.summary;
    sum.extremal.clear();
    for (SubsetIndex s : st.extremal) sum.extremal.push_back(space_.ideal_at(s));
    sum.violations.clear();
    for (SubsetIndex s : st.violations) sum.violations.push_back(space_.ideal_at(s));
    if (canon_) sum.n2_classes = st.classes.size();
  }

  nlohmann::json checkpoint_json(const CampaignState& st) const {
    const auto& sum = st.summary;
    nlohmann::json extremal = nlohmann::json::array();
    for (SubsetIndex s : st.extremal) extremal.push_back(ideal_to_json(space_.ideal_at(s)));
    nlohmann::json violations = nlohmann::json::array();
    for (SubsetIndex s : st.violations) violations.push_back(ideal_to_json(space_.ideal_at(s)));
    nlohmann::json out{
        {"n", space_.n()},
        {"d", space_.d()},
        {"field", field_.to_string()},
        {"cursor", sum.cursor},
        {"running_max", sum.max_reg},
        {"extremal_so_far", extremal},
        {"chunk_size", options_.chunk_size},
        {"symmetry", monlab::to_string(options_.symmetry)},
        {"total_ideals", sum.total_ideals},
        {"n2_count", sum.n2_count},
        {"skipped", sum.skipped},
        {"extremal_count", sum.extremal_count},
        {"violations", violations},
    };
    if (canon_) {
      out["classes"] = st.classes;
      out["extremal_classes"] = st.extremal_classes;
    }
    return out;
  }

  void write_checkpoint(const CampaignState& st) const {
    if (options_.checkpoint_path.empty()) return;
    const std::string tmp = options_.checkpoint_path + ".tmp";
    const std::string text = checkpoint_json(st).dump() + "\n";
    const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd < 0) throw InputError("cannot write checkpoint '" + tmp + "'");
    std::size_t written = 0;
    while (written < text.size()) {
      const auto w = ::write(fd, text.data() + written, text.size() - written);
      if (w <= 0) {
        ::close(fd);
        throw InputError("short write to checkpoint '" + tmp + "'");
      }
      written += static_cast<std::size_t>(w);
    }
    ::fsync(fd);
    ::close(fd);
    std::filesystem::rename(tmp, options_.checkpoint_path);
  }

  CampaignState load_checkpoint() const {
    std::ifstream in(options_.checkpoint_path);
    if (!in) throw ResumeError("cannot open checkpoint '" + options_.checkpoint_path + "'");
    CampaignState st;
    try {
      const auto j = nlohmann::json::parse(in);
      if (j.at("n").get<int>() != space_.n() || j.at("d").get<int>() != space_.d()) {
        throw ResumeError("checkpoint is for a different (n, d)");
      }
      if (j.at("field").get<std::string>() != field_.to_string()) {
        throw ResumeError("checkpoint is for field " + j.at("field").get<std::string>());
      }
      if (j.at("symmetry").get<std::string>() != monlab::to_string(options_.symmetry)) {
        throw ResumeError("checkpoint was written with a different symmetry mode");
      }
      auto& sum = st.summary;
      sum.cursor = j.at("cursor").get<SubsetIndex>();
      if (sum.cursor < 1 || sum.cursor > space_.end_index()) throw ResumeError("checkpoint cursor out of range");
      sum.max_reg = j.at("running_max").get<int>();
      sum.total_ideals = j.at("total_ideals").get<std::uint64_t>();
      sum.n2_count = j.at("n2_count").get<std::uint64_t>();
      sum.skipped = j.at("skipped").get<std::uint64_t>();
      sum.extremal_count = j.at("extremal_count").get<std::uint64_t>();
      if (sum.total_ideals != sum.cursor - 1) throw ResumeError("checkpoint counts disagree with its cursor");
      for (const auto& e : j.at("extremal_so_far")) {
        st.extremal.push_back(space_.index_of(ideal_from_json(space_.n(), e)));
      }
      for (const auto& e : j.at("violations")) {
        st.violations.push_back(space_.index_of(ideal_from_json(space_.n(), e)));
      }
      if (canon_) {
        st.classes = j.at("classes").get<std::set<SubsetIndex>>();
        st.extremal_classes = j.at("extremal_classes").get<std::set<SubsetIndex>>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw ResumeError("corrupted checkpoint '" + options_.checkpoint_path + "': " + e.what());
    } catch (const InputError& e) {
      throw ResumeError("corrupted checkpoint '" + options_.checkpoint_path + "': " + e.what());
    }
    return st;
  }

 private:
  const PureIdealSpace& space_;
  FieldSpec field_;
  VerifyOptions options_;
  int bound_;
  std::optional<SymmetryCanon> canon_;
};

}  // namespace

EnumerationSummary verify_range(int n, int d, const FieldSpec& field, const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const PureIdealSpace space(n, d);
  const Campaign campaign(space, field, options);

  CampaignState st;
  if (options.resume) {
    if (options.checkpoint_path.empty()) throw InputError("resume needs a checkpoint path");
    st = campaign.load_checkpoint();
  }
  st.summary.n = n;
  st.summary.d = d;
  st.summary.field = field.to_string();
  st.summary.symmetry = options.symmetry;

  const SubsetIndex start = st.summary.cursor;
  const SubsetIndex end = space.end_index();
  const SubsetIndex chunk = options.chunk_size;
  const std::uint64_t chunks = (end - start + chunk - 1) / chunk;
  auto chunk_begin = [&](std::uint64_t k) { return start + k * chunk; };
  auto chunk_end = [&](std::uint64_t k) { return std::min(end, start + (k + 1) * chunk); };

  std::uint64_t merged = 0;
  auto after_merge = [&](std::uint64_t k) {
    ++merged;
    st.summary.cursor = chunk_end(k);
    if (options.checkpoint_every && merged % options.checkpoint_every == 0) campaign.write_checkpoint(st);
  };
  const std::uint64_t limit =
      options.stop_after_chunks ? std::min<std::uint64_t>(chunks, options.stop_after_chunks) : chunks;

  if (options.jobs <= 1) {
    for (std::uint64_t k = 0; k < limit; ++k) {
      campaign.merge(st, campaign.run_chunk(chunk_begin(k), chunk_end(k)));
      after_merge(k);
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::uint64_t, ChunkResult> done;
    std::exception_ptr failure;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < options.jobs; ++w) {
      workers.emplace_back([&] {
        while (true) {
          const auto k = next.fetch_add(1);
          if (k >= limit) break;
          ChunkResult r;
          try {
            r = campaign.run_chunk(chunk_begin(k), chunk_end(k));
          } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
            next = limit;
            cv.notify_all();
            break;
          }
          std::lock_guard lock(mu);
          done.emplace(k, std::move(r));
          cv.notify_all();
        }
      });
    }
    // Merge strictly in chunk order.
    for (std::uint64_t k = 0; k < limit; ++k) {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done.count(k) || failure; });
      if (failure) break;
      auto node = done.extract(k);
      lock.unlock();
      campaign.merge(st, std::move(node.mapped()));
      after_merge(k);
    }
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  st.summary.complete = st.summary.cursor == end;
  campaign.write_checkpoint(st);
  campaign.finalize(st);
  st.summary.elapsed = std::chrono::steady_clock::now() - started;
  return st.summary;
}

}  // namespace monlab
