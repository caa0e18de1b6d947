#include "uqpa/diagram.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace uqpa {

namespace {

void check_position(int i, int n, const char* who) {
  if (n < 2 || i < 1 || i > n - 1) {
    throw std::out_of_range(std::string(who) + ": position " + std::to_string(i) +
                            " invalid for " + std::to_string(n) + " strands");
  }
}

// Removes the bits at positions i, i+1 of an n-strand word.
Word remove_pair(Word w, int i, int n) {
  const Word hi = w >> (n - i + 1);
  const Word lo = w & ((Word{1} << (n - i - 1)) - 1);
  return (hi << (n - i - 1)) | lo;
}

// Inserts a two-bit pair at positions i, i+1 of an (n-2)-strand word.
Word insert_pair(Word w, Word pair, int i, int n) {
  const Word hi = w >> (n - i - 1);
  const Word lo = w & ((Word{1} << (n - i - 1)) - 1);
  return (((hi << 2) | pair) << (n - i - 1)) | lo;
}

}  // namespace

LinOp cup(const Field& f, int i, int n) {
  check_position(i, n, "cup");
  LinOp op(f, n, n - 2);
  const CycloNum minus_q = -f.q();
  for (Word w = 0; w < op.in_dim(); ++w) {
    const bool a = occupied(w, n, i);
    const bool b = occupied(w, n, i + 1);
    if (a == b) continue;
    TensorVector v(f, n - 2);
    v.add(remove_pair(w, i, n), a ? f.one() : minus_q);
    op.set_column(w, std::move(v));
  }
  return op;
}

LinOp cap(const Field& f, int i, int n) {
  check_position(i, n, "cap");
  LinOp op(f, n - 2, n);
  const CycloNum q_inv = f.q_pow(-1);
  const CycloNum minus_one = -f.one();
  for (Word w = 0; w < op.in_dim(); ++w) {
    TensorVector v(f, n);
    v.add(insert_pair(w, 0b10, i, n), q_inv);
    v.add(insert_pair(w, 0b01, i, n), minus_one);
    op.set_column(w, std::move(v));
  }
  return op;
}

LinOp e_op(const Field& f, int i, int n) { return cap(f, i, n) * cup(f, i, n); }

// ------------------------------------------------------------- TLDiagram

TLDiagram::TLDiagram(int top, int bottom, std::vector<int> partner)
    : top_(top), bottom_(bottom), partner_(std::move(partner)) {
  const int total = top + bottom;
  if (top < 0 || bottom < 0 || total % 2 != 0 || static_cast<int>(partner_.size()) != total) {
    throw std::invalid_argument("TLDiagram: boundary sizes do not match the pairing");
  }
  for (int a = 0; a < total; ++a) {
    const int b = partner_[a];
    if (b < 0 || b >= total || b == a || partner_[b] != a) {
      throw std::invalid_argument("TLDiagram: not a perfect matching");
    }
  }
  // Planarity: read the boundary clockwise and require the chords to nest.
  std::vector<int> order;
  for (int a = 0; a < top; ++a) order.push_back(a);
  for (int a = total - 1; a >= top; --a) order.push_back(a);
  std::vector<int> stack;
  std::vector<bool> opened(total, false);
  for (int a : order) {
    if (!opened[partner_[a]]) {
      opened[a] = true;
      stack.push_back(a);
    } else {
      if (stack.empty() || stack.back() != partner_[a]) {
        throw std::invalid_argument("TLDiagram: pairing is not planar");
      }
      stack.pop_back();
    }
  }
}

TLDiagram TLDiagram::identity(int n) {
  std::vector<int> partner(2 * n);
  for (int a = 0; a < n; ++a) {
    partner[a] = n + a;
    partner[n + a] = a;
  }
  return TLDiagram(n, n, std::move(partner));
}

TLDiagram TLDiagram::generator(int i, int n) {
  check_position(i, n, "TLDiagram::generator");
  TLDiagram d = identity(n);
  const int a = i - 1;
  d.partner_[a] = a + 1;
  d.partner_[a + 1] = a;
  d.partner_[n + a] = n + a + 1;
  d.partner_[n + a + 1] = n + a;
  return d;
}

TLDiagram TLDiagram::from_parens(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("TLDiagram::from_parens: missing '|'");
  const int top = static_cast<int>(bar);
  const int bottom = static_cast<int>(text.size() - bar - 1);
  std::vector<int> partner(top + bottom, -1);
  std::vector<int> stack;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (k == bar) continue;
    // clockwise position k maps back to a point index
    const int point = k < bar ? static_cast<int>(k) : top + bottom - 1 - static_cast<int>(k - bar - 1);
    if (text[k] == '(') {
      stack.push_back(point);
    } else if (text[k] == ')') {
      if (stack.empty()) throw std::invalid_argument("TLDiagram::from_parens: unbalanced");
      partner[point] = stack.back();
      partner[stack.back()] = point;
      stack.pop_back();
    } else {
      throw std::invalid_argument("TLDiagram::from_parens: unexpected character");
    }
  }
  if (!stack.empty()) throw std::invalid_argument("TLDiagram::from_parens: unbalanced");
  return TLDiagram(top, bottom, std::move(partner));
}

std::string TLDiagram::parens() const {
  const int total = top_ + bottom_;
  std::vector<int> rank(total);
  int k = 0;
  for (int a = 0; a < top_; ++a) rank[a] = k++;
  for (int a = total - 1; a >= top_; --a) rank[a] = k++;
  std::string s;
  for (int a = 0; a < top_; ++a) s.push_back(rank[partner_[a]] > rank[a] ? '(' : ')');
  s.push_back('|');
  for (int a = total - 1; a >= top_; --a) s.push_back(rank[partner_[a]] > rank[a] ? '(' : ')');
  return s;
}

std::vector<std::pair<int, int>> TLDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(partner_.size()); ++a) {
    if (a < partner_[a]) out.emplace_back(a, partner_[a]);
  }
  return out;
}

int TLDiagram::through_strands() const {
  int n = 0;
  for (int a = 0; a < top_; ++a) n += partner_[a] >= top_;
  return n;
}

Composite compose(const TLDiagram& a, const TLDiagram& b) {
  if (b.bottom() != a.top()) throw std::invalid_argument("compose: boundary mismatch");
  const int tb = b.top();
  const int mid = a.top();
  const int ba = a.bottom();
  std::vector<bool> seen(mid, false);
  std::vector<int> partner(tb + ba, -1);

  // Walk from an external point until another external point is reached.
  // side 0 is b, side 1 is a.
  auto walk = [&](int side, int point) {
    for (;;) {
      if (side == 0) {
        const int m = b.partner()[point];
        if (m < tb) return m;
        seen[m - tb] = true;
        side = 1;
        point = m - tb;
      } else {
        const int m = a.partner()[point];
        if (m >= mid) return tb + (m - mid);
        seen[m] = true;
        side = 0;
        point = tb + m;
      }
    }
  };
  for (int x = 0; x < tb; ++x) {
    if (partner[x] < 0) {
      const int y = walk(0, x);
      partner[x] = y;
      partner[y] = x;
    }
  }
  for (int x = 0; x < ba; ++x) {
    if (partner[tb + x] < 0) {
      const int y = walk(1, mid + x);
      partner[tb + x] = y;
      partner[y] = tb + x;
    }
  }
  int loops = 0;
  for (int m = 0; m < mid; ++m) {
    if (seen[m]) continue;
    ++loops;
    int cur = m;
    do {
      seen[cur] = true;
      const int down = b.partner()[tb + cur] - tb;  // stays on b's bottom row
      seen[down] = true;
      cur = a.partner()[down];                       // back on a's top row
    } while (cur != m);
  }
  return {TLDiagram(tb, ba, std::move(partner)), loops};
}

TLDiagram extend_right(const TLDiagram& d, int extra) {
  const int t = d.top();
  const int b = d.bottom();
  const int nt = t + extra;
  const int nb = b + extra;
  std::vector<int> partner(nt + nb);
  auto remap = [&](int x) { return x < t ? x : nt + (x - t); };
  for (int x = 0; x < t + b; ++x) partner[remap(x)] = remap(d.partner()[x]);
  for (int k = 0; k < extra; ++k) {
    partner[t + k] = nt + b + k;
    partner[nt + b + k] = t + k;
  }
  return TLDiagram(nt, nb, std::move(partner));
}

std::vector<TLDiagram> tl_basis(int n) {
  std::vector<TLDiagram> out;
  std::set<TLDiagram> seen;
  std::deque<TLDiagram> queue;
  queue.push_back(TLDiagram::identity(n));
  seen.insert(queue.front());
  while (!queue.empty()) {
    TLDiagram d = queue.front();
    queue.pop_front();
    out.push_back(d);
    for (int i = 1; i < n; ++i) {
      Composite c = compose(TLDiagram::generator(i, n), d);
      if (seen.insert(c.diagram).second) queue.push_back(c.diagram);
    }
  }
  return out;
}

// ------------------------------------------------------------- TLElement

TLElement::TLElement(const Field& field, int top, int bottom)
    : field_(&field), top_(top), bottom_(bottom) {}

TLElement TLElement::identity(const Field& field, int n) {
  return from_diagram(field, TLDiagram::identity(n));
}

TLElement TLElement::generator(const Field& field, int i, int n) {
  return from_diagram(field, TLDiagram::generator(i, n));
}

TLElement TLElement::from_diagram(const Field& field, const TLDiagram& d) {
  TLElement x(field, d.top(), d.bottom());
  x.add(d, field.one());
  return x;
}

void TLElement::add(const TLDiagram& d, const CycloNum& c) {
  if (d.top() != top_ || d.bottom() != bottom_) {
    throw std::invalid_argument("TLElement::add: boundary mismatch");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& rhs) {
  for (const auto& [d, c] : rhs.terms_) add(d, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& rhs) {
  for (const auto& [d, c] : rhs.terms_) add(d, -c);
  return *this;
}

TLElement& TLElement::operator*=(const CycloNum& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= s;
  return *this;
}

std::string TLElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*[" << d.parens() << "]";
  }
  return os.str();
}

TLElement tl_compose(const TLElement& a, const TLElement& b) {
  if (b.bottom() != a.top()) throw std::invalid_argument("tl_compose: boundary mismatch");
  const Field& f = a.field();
  TLElement out(f, b.top(), a.bottom());
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      const Composite c = compose(da, db);
      out.add(c.diagram, ca * cb * f.delta().pow(c.loops));
    }
  }
  return out;
}

TLElement extend_right(const TLElement& x, int extra) {
  TLElement out(x.field(), x.top() + extra, x.bottom() + extra);
  for (const auto& [d, c] : x.terms()) out.add(extend_right(d, extra), c);
  return out;
}

// ------------------------------------------------------------ TLRealizer

TLRealizer::TLRealizer(const Field& field, int n) : field_(&field), n_(n) {
  std::vector<LinOp> gens;
  for (int i = 1; i < n; ++i) gens.push_back(e_op(field, i, n));
  const TLDiagram id = TLDiagram::identity(n);
  table_.emplace(id, std::make_pair(std::vector<int>{}, LinOp::identity(field, n)));
  std::deque<TLDiagram> queue{id};
  while (!queue.empty()) {
    const TLDiagram d = queue.front();
    queue.pop_front();
    order_.push_back(d);
    for (int i = 1; i < n; ++i) {
      const Composite c = compose(TLDiagram::generator(i, n), d);
      if (c.loops > 0 || table_.count(c.diagram)) continue;
      const auto& [word, mat] = table_.at(d);
      std::vector<int> w{i};
      w.insert(w.end(), word.begin(), word.end());
      table_.emplace(c.diagram, std::make_pair(std::move(w), gens[i - 1] * mat));
      queue.push_back(c.diagram);
    }
  }
}

const LinOp& TLRealizer::matrix(const TLDiagram& d) const {
  auto it = table_.find(d);
  if (it == table_.end()) throw std::invalid_argument("TLRealizer: diagram not in TL_n");
  return it->second.second;
}

const std::vector<int>& TLRealizer::word(const TLDiagram& d) const {
  auto it = table_.find(d);
  if (it == table_.end()) throw std::invalid_argument("TLRealizer: diagram not in TL_n");
  return it->second.first;
}

LinOp TLRealizer::matrix(const TLElement& x) const {
  if (x.top() != n_ || x.bottom() != n_) throw std::invalid_argument("TLRealizer: wrong strand count");
  LinOp out(*field_, n_, n_);
  for (const auto& [d, c] : x.terms()) {
    LinOp m = matrix(d);
    m *= c;
    out += m;
  }
  return out;
}

// ----------------------------------------------------------- Jones-Wenzl

TLElement jw_recursive(const Field& f, int n) {
  if (n < 1) throw std::invalid_argument("jw_recursive: n must be positive");
  if (n >= f.p()) {
    throw JWUndefined("jw_recursive: f_" + std::to_string(n) + " needs division by [" +
                      std::to_string(f.p()) + "] = 0");
  }
  TLElement jw = TLElement::identity(f, 1);
  for (int m = 1; m < n; ++m) {
    const TLElement ext = extend_right(jw, 1);
    const TLElement sandwich =
        tl_compose(tl_compose(ext, TLElement::generator(f, m, m + 1)), ext);
    jw = ext - (f.qint(m) / f.qint(m + 1)) * sandwich;
  }
  return jw;
}

LinOp jw_closed(const Field& f, int n) {
  LinOp op(f, n, n);
  std::vector<CycloNum> ratio(n + 1);
  for (int k = 0; k <= n; ++k) {
    QFactProduct r;
    r.times_qfact(n - k).times_qfact(k).over_qfact(n);
    ratio[k] = f.eval(r);  // throws SingularRatio
  }
  // F^k x_0 = [k]! sum_T q^{(k^2+k)/2 - sum T} rho_T, so the [k]! joins the
  // ratio and the entry for rho_T in the image of rho_S is
  // q^{kn + k - sum S - sum T} [n-k]![k]!/[n]!.
  for (Word w = 0; w < op.in_dim(); ++w) {
    const int k = weight(w);
    long sum_s = 0;
    for (int pos : occupied_positions(w, n)) sum_s += pos;
    TensorVector v(f, n);
    for (Word t : words_of_weight(n, k)) {
      long sum_t = 0;
      for (int pos : occupied_positions(t, n)) sum_t += pos;
      v.add(t, f.q_pow(static_cast<long>(k) * n + k - sum_s - sum_t) * ratio[k]);
    }
    op.set_column(w, std::move(v));
  }
  return op;
}

LinOp rotation(const LinOp& op) {
  const Field& f = op.field();
  const int a = op.in_strands();
  const int b = op.out_strands();
  return cup(f, 1, b + 2) * pad(op, 1, 1) * cap(f, a + 1, a + 2);
}

LinOp rotation_power(const LinOp& op, int clicks) {
  LinOp out = op;
  for (int i = 0; i < clicks; ++i) out = rotation(out);
  return out;
}

}  // namespace uqpa
