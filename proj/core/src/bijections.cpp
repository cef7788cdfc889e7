#include "qpart/bijections.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "qpart/error.hpp"
#include "qpart/text.hpp"

namespace qpart {

namespace {

std::vector<Element> mirror(const std::vector<Element>& set, int n) {
  std::vector<Element> out;
  out.reserve(set.size());
  for (Element i : set) out.push_back(n + 1 - i);
  std::sort(out.begin(), out.end());
  return out;
}

GammaMatrix row(const std::vector<Element>& values, const TraceProfile& t) {
  GammaMatrix m{values, {}};
  m.gamma.reserve(values.size());
  for (Element v : values) m.gamma.push_back(t.g(v));
  return m;
}

struct GrowingBlock {
  Block elements;
  bool complete;
};

}  // namespace

PhiCertificate phi_certificate(const SetPartition& p) {
  const int n = p.size();
  const ElementClassification c = classify(p);
  const TraceProfile t = trace_profile(p);

  PhiCertificate cert;
  cert.source = p;
  cert.closers = row(c.closers_ns, t);
  cert.passants = row(c.passants, t);

  // Mirrored classes of the image.
  const std::vector<Element> singletons = mirror(c.singletons, n);
  const std::vector<Element> openers_ns = mirror(c.closers_ns, n);
  const std::vector<Element> closers_ns = mirror(c.openers_ns, n);
  const std::vector<Element> passants = mirror(c.passants, n);

  cert.image_closers = {closers_ns, std::vector<int>(closers_ns.size(), 0)};
  {
    // Levels of the image closers follow from the mirrored classes alone.
    std::vector<int> image_level(static_cast<std::size_t>(n) + 1, 0);
    int height = 0;
    for (Element i = 1; i <= n; ++i) {
      image_level[static_cast<std::size_t>(i)] = height;
      if (std::binary_search(openers_ns.begin(), openers_ns.end(), i)) ++height;
      if (std::binary_search(closers_ns.begin(), closers_ns.end(), i)) --height;
    }
    std::map<int, std::vector<int>> by_level;
    for (std::size_t j = 0; j < c.closers_ns.size(); ++j) {
      by_level[t.l(c.closers_ns[j])].push_back(cert.closers.gamma[j]);
    }
    std::map<int, std::size_t> used;
    for (std::size_t j = 0; j < closers_ns.size(); ++j) {
      const int level = image_level[static_cast<std::size_t>(closers_ns[j])];
      auto& queue = by_level[level];
      std::size_t& at = used[level];
      if (at >= queue.size()) {
        throw ConsistencyError("phi: no source closer at level " + std::to_string(level) + " in " + to_string(p));
      }
      cert.image_closers.gamma[j] = queue[at++];
    }
  }
  cert.image_passants = {passants, {cert.passants.gamma.rbegin(), cert.passants.gamma.rend()}};

  // gamma' and role for every element to be inserted.
  std::vector<int> target_gamma(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> seals(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t j = 0; j < closers_ns.size(); ++j) {
    target_gamma[static_cast<std::size_t>(closers_ns[j])] = cert.image_closers.gamma[j];
    seals[static_cast<std::size_t>(closers_ns[j])] = true;
  }
  for (std::size_t j = 0; j < passants.size(); ++j) {
    target_gamma[static_cast<std::size_t>(passants[j])] = cert.image_passants.gamma[j];
  }

  // Seed one block per image opener, ordered by that opener.
  std::vector<Element> openers;
  std::merge(singletons.begin(), singletons.end(), openers_ns.begin(), openers_ns.end(),
             std::back_inserter(openers));
  std::vector<GrowingBlock> blocks;
  blocks.reserve(openers.size());
  for (Element o : openers) {
    blocks.push_back({{o}, std::binary_search(singletons.begin(), singletons.end(), o)});
  }

  std::vector<Element> inserts;
  std::merge(closers_ns.begin(), closers_ns.end(), passants.begin(), passants.end(),
             std::back_inserter(inserts));
  for (Element x : inserts) {
    const int g = target_gamma[static_cast<std::size_t>(x)];
    int seen = 0;
    GrowingBlock* target = nullptr;
    for (auto& b : blocks) {
      if (b.elements.front() > x) break;  // blocks are ordered by opener
      if (b.complete) continue;
      if (++seen == g) {
        target = &b;
        break;
      }
    }
    if (target == nullptr) {
      throw ConsistencyError("phi: gamma " + std::to_string(g) + " for element " +
                             std::to_string(x) + " exceeds the " + std::to_string(seen) +
                             " incomplete blocks of " + to_string(p));
    }
    target->elements.push_back(x);
    if (seals[static_cast<std::size_t>(x)]) target->complete = true;
  }

  std::vector<Block> out;
  out.reserve(blocks.size());
  for (auto& b : blocks) out.push_back(std::move(b.elements));
  cert.image = from_blocks(std::move(out));

  const ElementClassification ci = classify(cert.image);
  if (ci.singletons != singletons || ci.openers_ns != openers_ns ||
      ci.closers_ns != closers_ns || ci.passants != passants) {
    throw ConsistencyError("phi: image " + to_string(cert.image) + " of " + to_string(p) +
                           " does not carry the mirrored classification");
  }
  const TraceProfile ti = trace_profile(cert.image);
  if (row(closers_ns, ti) != cert.image_closers || row(passants, ti) != cert.image_passants) {
    throw ConsistencyError("phi: image " + to_string(cert.image) + " of " + to_string(p) +
                           " does not reproduce the transferred gamma rows");
  }
  return cert;
}

SetPartition phi(const SetPartition& p) { return phi_certificate(p).image; }

std::string to_json(const PhiCertificate& cert) {
  auto matrix = [](const GammaMatrix& m) {
    return nlohmann::json{{"values", m.values}, {"gamma", m.gamma}};
  };
  nlohmann::json j{
      {"source", to_string(cert.source)},
      {"image", to_string(cert.image)},
      {"source_matrices", {{"f", matrix(cert.closers)}, {"p", matrix(cert.passants)}}},
      {"image_matrices", {{"f", matrix(cert.image_closers)}, {"p", matrix(cert.image_passants)}}},
  };
  return j.dump();
}

SetPartition phi_i(const SetPartition& p, int i) {
  const int blocks = p.block_count();
  if (i < 1 || i >= blocks) {
    throw std::out_of_range("phi_i: i = " + std::to_string(i) + " outside [1, " +
                            std::to_string(blocks - 1) + "]");
  }
  std::vector<Block> b = p.blocks();
  Block& left = b[static_cast<std::size_t>(i - 1)];
  Block& right = b[static_cast<std::size_t>(i)];
  const Element g = right.back();

  if (right.size() == 1 && left.back() < g) return p;

  const auto tail_begin = std::upper_bound(left.begin(), left.end(), g);
  Block tail(tail_begin, left.end());
  left.erase(tail_begin, left.end());
  if (right.size() > 1) {
    right.pop_back();
    left.push_back(g);
  }
  right.insert(right.end(), tail.begin(), tail.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());

  SetPartition image = from_blocks(std::move(b));
  if (classify(image).openers != classify(p).openers) {
    throw ConsistencyError("phi_i: opener set of " + to_string(p) + " changed to that of " +
                           to_string(image));
  }
  return image;
}

std::map<Element, Element> match_openers_closers(const SetPartition& p) {
  const ElementClassification c = classify(p);
  const TraceProfile t = trace_profile(p);
  std::vector<bool> used(c.closers_ns.size(), false);
  std::map<Element, Element> out;
  for (Element a : c.openers_ns) {
    bool found = false;
    for (std::size_t j = 0; j < c.closers_ns.size(); ++j) {
      if (!used[j] && t.l(c.closers_ns[j]) == t.l(a) + 1) {
        used[j] = true;
        out.emplace(a, c.closers_ns[j]);
        found = true;
        break;
      }
    }
    if (!found) {
      throw ConsistencyError("no closer at level " + std::to_string(t.l(a) + 1) +
                             " left for opener " + std::to_string(a) + " of " + to_string(p));
    }
  }
  return out;
}

}  // namespace qpart
