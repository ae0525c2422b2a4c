#include "datapath.hpp"

#include <fstream>
#include <ostream>

#include "errors.hpp"

namespace ledti {

namespace {

// Serpentine order equals the row-major cell index: bytes advance toward the
// head at position 00 (index 0) and re-enter at position 33 (index 15).
constexpr int HEAD = 0;
constexpr int TAIL = 15;

uint8_t pt_nibble(uint64_t v, int i) {
    return static_cast<uint8_t>((v >> (60 - 4 * i)) & 0xF);
}

uint8_t rc_advance_share0(uint8_t r) {
    // Carries the LFSR's affine constant; share 1 takes the linear part.
    uint8_t fb = static_cast<uint8_t>(((r >> 5) ^ (r >> 4) ^ 1) & 1);
    return static_cast<uint8_t>(((r << 1) | fb) & 0x3F);
}

uint8_t rc_advance_share1(uint8_t r) {
    uint8_t fb = static_cast<uint8_t>(((r >> 5) ^ (r >> 4)) & 1);
    return static_cast<uint8_t>(((r << 1) | fb) & 0x3F);
}

}  // namespace

const char* fsm_state_name(FsmState s) {
    switch (s) {
        case FsmState::IDLE: return "IDLE";
        case FsmState::ADDSHARE: return "ADDSHARE";
        case FsmState::INIT: return "INIT";
        case FsmState::ADDCONSTANT: return "ADDCONSTANT";
        case FsmState::SBOX_CAL: return "SBOX_CAL";
        case FsmState::SBOX_SHIFT: return "SBOX_SHIFT";
        case FsmState::SHIFTROW: return "SHIFTROW";
        case FsmState::MIXCOL: return "MIXCOL";
        case FsmState::NEXTROUND: return "NEXTROUND";
        case FsmState::ADDKEY: return "ADDKEY";
        case FsmState::BACK: return "BACK";
    }
    return "?";
}

FsmState fsm_next(FsmState state, const Counters& c) {
    switch (state) {
        case FsmState::IDLE: return FsmState::ADDSHARE;
        case FsmState::ADDSHARE: return FsmState::INIT;
        case FsmState::INIT: return FsmState::ADDCONSTANT;
        case FsmState::ADDCONSTANT: return FsmState::SBOX_CAL;
        case FsmState::SBOX_CAL: return FsmState::SBOX_SHIFT;
        case FsmState::SBOX_SHIFT:
            return c.bcount >= 16 ? FsmState::SHIFTROW : FsmState::ADDCONSTANT;
        case FsmState::SHIFTROW: return FsmState::MIXCOL;
        case FsmState::MIXCOL: return FsmState::NEXTROUND;
        case FsmState::NEXTROUND:
            return c.rcount >= 4 ? FsmState::ADDKEY : FsmState::ADDCONSTANT;
        case FsmState::ADDKEY:
            return c.scount >= 12 ? FsmState::BACK : FsmState::ADDCONSTANT;
        case FsmState::BACK: return FsmState::IDLE;
    }
    return FsmState::IDLE;
}

void TransitionLog::export_csv(std::ostream& out) const {
    out << "cycle,state,reg_id,old_hex,new_hex\n";
    for (size_t c = 0; c < cycles.size(); ++c) {
        const auto& rec = cycles[c];
        for (const auto& t : rec.changes) {
            out << c << ',' << fsm_state_name(rec.state) << ','
                << registers[t.reg].name << ',' << std::hex << t.old_value
                << ',' << t.new_value << std::dec << '\n';
        }
    }
}

void TransitionLog::export_csv_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write transition log: " + path);
    export_csv(out);
    if (!out) throw io_error("failed writing transition log: " + path);
}

// --- simulator ---------------------------------------------------------------

Simulator::Simulator(Design design, const SboxDecomposition& d, SimConfig cfg)
    : design_(design), decomp_(d), cfg_(cfg) {
    build_registry();
}

void Simulator::build_registry() {
    const bool prot = design_ == Design::Protected;
    auto add = [&](const std::string& name, int width) {
        registry_.push_back(RegisterInfo{name, width});
        return static_cast<int>(registry_.size()) - 1;
    };
    auto cell_name = [](const char* base, int idx) {
        return std::string(base) + std::to_string(idx / 4) +
               std::to_string(idx % 4);
    };

    reg_data_ = static_cast<int>(registry_.size());
    for (int j = 0; j < 16; ++j) {
        if (prot) {
            add(cell_name("d", j) + "_s0", 4);
            add(cell_name("d", j) + "_s1", 4);
        } else {
            add(cell_name("d", j), 4);
        }
    }
    for (int b = 0; b < 2; ++b) {
        reg_key_[b] = static_cast<int>(registry_.size());
        const char* base = (b == 0) ? "k1_" : "k2_";
        for (int j = 0; j < 16; ++j) {
            if (prot) {
                add(cell_name(base, j) + "_s0", 4);
                add(cell_name(base, j) + "_s1", 4);
            } else {
                add(cell_name(base, j), 4);
            }
        }
    }
    if (prot) {
        reg_sbin_ = add("sbin_s0", 4);
        add("sbin_s1", 4);
        add("sbin_s2", 4);
        reg_gout_ = add("gout_s0", 4);
        add("gout_s1", 4);
        add("gout_s2", 4);
    }
    if (prot && !cfg_.rc_one_share) {
        reg_rc_ = add("rc_s0", 6);
        add("rc_s1", 6);
    } else {
        reg_rc_ = add("rc", 6);
    }
    reg_fsm_ = add("fsm", 4);
    reg_bcount_ = add("bcount", 5);
    reg_rcount_ = add("rcount", 3);
    reg_scount_ = add("scount", 4);
    reg_phase_ = add("phase", 2);
}

void Simulator::reset_registers() {
    data_.fill(Share2{});
    key_[0].cells.fill(Share2{});
    key_[1].cells.fill(Share2{});
    sbin_ = Share3{};
    gout_ = Share3{};
    rc_ = Share2{};
    counters_ = Counters{};
    phase_ = 0;
    cycle_ = 0;
    out_bits_ = 0;
    out_nibbles_ = 0;
    pending_resets_.clear();
    armed_resets_.clear();
}

void Simulator::set_share(int base_reg, Share2& slot, Share2 v) {
    if (sink_) {
        if (v.s0 != slot.s0)
            sink_->record({static_cast<uint16_t>(base_reg), slot.s0, v.s0}, 4);
        if (design_ == Design::Protected && v.s1 != slot.s1)
            sink_->record({static_cast<uint16_t>(base_reg + 1), slot.s1, v.s1},
                          4);
    }
    slot = v;
}

void Simulator::set_nibble(int reg, uint8_t& slot, uint8_t v) {
    if (sink_ && v != slot)
        sink_->record({static_cast<uint16_t>(reg), slot, v},
                      registry_[static_cast<size_t>(reg)].width);
    slot = v;
}

void Simulator::set_counter(int reg, int& slot, int v) {
    // A counter clearing this cycle (deferred from the previous exit edge)
    // folds into this write: one log entry from the held terminal count.
    for (auto it = armed_resets_.begin(); it != armed_resets_.end(); ++it) {
        if (it->reg == reg) {
            const int held = it->old_value;
            armed_resets_.erase(it);
            if (sink_ && v != held)
                sink_->record({static_cast<uint16_t>(reg),
                               static_cast<uint16_t>(held),
                               static_cast<uint16_t>(v)},
                              registry_[static_cast<size_t>(reg)].width);
            slot = v;
            return;
        }
    }
    if (sink_ && v != slot)
        sink_->record({static_cast<uint16_t>(reg),
                       static_cast<uint16_t>(slot),
                       static_cast<uint16_t>(v)},
                      registry_[static_cast<size_t>(reg)].width);
    slot = v;
}

void Simulator::defer_counter_reset(int reg, int& slot) {
    if (slot != 0) pending_resets_.push_back({reg, slot});
    slot = 0;  // state logic sees the cleared value immediately
}

void Simulator::flush_armed_resets() {
    for (const PendingReset& p : armed_resets_) {
        if (sink_)
            sink_->record({static_cast<uint16_t>(p.reg),
                           static_cast<uint16_t>(p.old_value), 0},
                          registry_[static_cast<size_t>(p.reg)].width);
    }
    armed_resets_.clear();
}

void Simulator::rotate_data(const Share2& tail_in) {
    const bool prot = design_ == Design::Protected;
    const int stride = prot ? 2 : 1;
    for (int j = HEAD; j < TAIL; ++j)
        set_share(reg_data_ + j * stride, data_[static_cast<size_t>(j)],
                  data_[static_cast<size_t>(j + 1)]);
    set_share(reg_data_ + TAIL * stride, data_[TAIL], tail_in);
}

void Simulator::rotate_key(KeyBank& bank, const Share2& tail_in) {
    const bool prot = design_ == Design::Protected;
    const int stride = prot ? 2 : 1;
    const int base = reg_key_[&bank == &key_[0] ? 0 : 1];
    for (int j = HEAD; j < TAIL; ++j)
        set_share(base + j * stride, bank.cells[static_cast<size_t>(j)],
                  bank.cells[static_cast<size_t>(j + 1)]);
    set_share(base + TAIL * stride, bank.cells[TAIL], tail_in);
}

void Simulator::apply_mds_to_col0() {
    // One serial MDS step: column 0 <- A * column 0, per share (A is linear).
    Share2 col[4];
    for (int r = 0; r < 4; ++r) {
        Share2 acc{};
        for (int k = 0; k < 4; ++k) {
            const Share2& cell = data_[static_cast<size_t>(k * 4)];
            uint8_t coef = MDS_A[static_cast<size_t>(r)][static_cast<size_t>(k)];
            acc.s0 ^= gf16_mul(coef, cell.s0);
            acc.s1 ^= gf16_mul(coef, cell.s1);
        }
        col[r] = acc;
    }
    const bool prot = design_ == Design::Protected;
    const int stride = prot ? 2 : 1;
    if (phase_ < 3) {
        for (int r = 0; r < 4; ++r)
            set_share(reg_data_ + r * 4 * stride,
                      data_[static_cast<size_t>(r * 4)], col[r]);
    } else {
        // Final application is merged with a left rotation of the columns,
        // so each finished column parks at the back while the next moves in.
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 3; ++c)
                set_share(reg_data_ + (r * 4 + c) * stride,
                          data_[static_cast<size_t>(r * 4 + c)],
                          data_[static_cast<size_t>(r * 4 + c + 1)]);
            set_share(reg_data_ + (r * 4 + 3) * stride,
                      data_[static_cast<size_t>(r * 4 + 3)], col[r]);
        }
    }
}

void Simulator::load_inputs(uint64_t plaintext, const Key128& key, Rng rng) {
    if (running())
        throw state_error("load_inputs called while a run is in progress");
    reset_registers();
    staged_pt_ = plaintext;
    staged_key_ = key;
    rng_ = rng;
    if (design_ == Design::Protected) {
        fsm_ = FsmState::ADDSHARE;
    } else {
        // Reset-load: registers take their values directly, unbilled.
        for (int j = 0; j < 16; ++j) {
            data_[static_cast<size_t>(j)].s0 = pt_nibble(plaintext, j);
            key_[0].cells[static_cast<size_t>(j)].s0 = pt_nibble(key.k1, j);
            key_[1].cells[static_cast<size_t>(j)].s0 = pt_nibble(key.k2, j);
        }
        fsm_ = FsmState::INIT;
    }
    logged_fsm_ = FsmState::IDLE;
}

void Simulator::fire_boundary_hook(int boundary) {
    if (boundary_hook_) boundary_hook_(boundary, recombined_state());
}

State Simulator::recombined_state() const {
    State s;
    for (int j = 0; j < 16; ++j)
        s.cells[static_cast<size_t>(j / 4)][static_cast<size_t>(j % 4)] =
            recombine_2to1(data_[static_cast<size_t>(j)]);
    return s;
}

const std::array<std::array<bool, 3>, 3>& Simulator::sbox_wiring() {
    // Row i: shares of a pipeline input variable feeding output share i.
    static const std::array<std::array<bool, 3>, 3> w = {{
        {{false, true, true}},
        {{true, false, true}},
        {{true, true, false}},
    }};
    return w;
}

// Performs the current state's work for one clock; returns true when the
// state has finished and control should move through fsm_next.
bool Simulator::dispatch() {
    switch (fsm_) {
        case FsmState::ADDSHARE: return cycle_addshare();
        case FsmState::INIT: return cycle_key_add(/*initial=*/true);
        case FsmState::ADDCONSTANT: return cycle_addconstant();
        case FsmState::SBOX_CAL: return cycle_sbox();
        case FsmState::SHIFTROW: return cycle_shiftrow();
        case FsmState::MIXCOL: return cycle_mixcol();
        case FsmState::ADDKEY: return cycle_key_add(/*initial=*/false);
        case FsmState::BACK: return cycle_back();
        default:
            throw state_error("cannot step simulator in state " +
                              std::string(fsm_state_name(fsm_)));
    }
}

bool Simulator::cycle_addshare() {
    const int i = counters_.bcount;
    if (i == 0 && !cfg_.rc_one_share) {
        // The RC register is masked once per run, before its first use: both
        // shares start at the mask so they recombine to the reset value 0.
        uint8_t m_rc = static_cast<uint8_t>(rng_.next_u64() & 0x3F);
        set_nibble(reg_rc_, rc_.s0, m_rc);
        set_nibble(reg_rc_ + 1, rc_.s1, m_rc);
    }
    const Share2 d_in = split_1to2(pt_nibble(staged_pt_, i), rng_.next_nibble());
    const Share2 k1_in =
        split_1to2(pt_nibble(staged_key_.k1, i), rng_.next_nibble());
    const Share2 k2_in =
        split_1to2(pt_nibble(staged_key_.k2, i), rng_.next_nibble());
    rotate_data(d_in);
    rotate_key(key_[0], k1_in);
    rotate_key(key_[1], k2_in);
    set_counter(reg_bcount_, counters_.bcount, i + 1);
    return counters_.bcount == 16;
}

bool Simulator::cycle_key_add(bool initial) {
    const int boundary = initial ? 0 : counters_.scount;
    KeyBank& bank = key_[boundary % 2];  // even boundaries use k1
    const Share2 kh = bank.cells[HEAD];
    const Share2 added{static_cast<uint8_t>(data_[HEAD].s0 ^ kh.s0),
                       static_cast<uint8_t>(data_[HEAD].s1 ^ kh.s1)};
    rotate_data(added);
    rotate_key(bank, kh);
    set_counter(reg_bcount_, counters_.bcount, counters_.bcount + 1);
    return counters_.bcount == 16;
}

bool Simulator::cycle_addconstant() {
    if (counters_.bcount == 0) {
        // New round: the LFSR advances just before its constants are used.
        if (design_ == Design::Protected && !cfg_.rc_one_share) {
            set_nibble(reg_rc_, rc_.s0, rc_advance_share0(rc_.s0));
            set_nibble(reg_rc_ + 1, rc_.s1, rc_advance_share1(rc_.s1));
        } else {
            set_nibble(reg_rc_, rc_.s0, rc_advance(rc_.s0));
        }
    }
    const int row = counters_.bcount / 4;
    const int col = counters_.bcount % 4;
    Share2 head = data_[HEAD];
    if (col == 0) {
        head.s0 ^= static_cast<uint8_t>(row ^ (row % 2 == 0 ? KS_HI : KS_LO));
    } else if (col == 1) {
        const int shift = (row % 2 == 0) ? 3 : 0;
        head.s0 ^= static_cast<uint8_t>((rc_.s0 >> shift) & 7);
        head.s1 ^= static_cast<uint8_t>((rc_.s1 >> shift) & 7);
    }
    set_share(reg_data_, data_[HEAD], head);
    return true;
}

bool Simulator::cycle_sbox() {
    if (design_ == Design::Unprotected) {
        rotate_data(Share2{sbox_lookup(data_[HEAD].s0), 0});
        return true;
    }
    switch (phase_) {
        case 0: {
            const Share3 in = expand_2to3(data_[HEAD], rng_.next_nibble());
            set_nibble(reg_sbin_, sbin_.s0, in.s0);
            set_nibble(reg_sbin_ + 1, sbin_.s1, in.s1);
            set_nibble(reg_sbin_ + 2, sbin_.s2, in.s2);
            set_counter(reg_phase_, phase_, 1);
            return false;
        }
        case 1: {
            const Share3 g = g_stage(decomp_, sbin_);
            set_nibble(reg_gout_, gout_.s0, g.s0);
            set_nibble(reg_gout_ + 1, gout_.s1, g.s1);
            set_nibble(reg_gout_ + 2, gout_.s2, g.s2);
            set_counter(reg_phase_, phase_, 2);
            return false;
        }
        default: {
            rotate_data(reduce_3to2(f_stage(decomp_, gout_)));
            set_counter(reg_phase_, phase_, 0);
            return true;
        }
    }
}

bool Simulator::cycle_shiftrow() {
    // Cycle j rotates every row below row j left by one position; after the
    // three cycles row r has rotated r times.
    const bool prot = design_ == Design::Protected;
    const int stride = prot ? 2 : 1;
    for (int r = counters_.bcount + 1; r < 4; ++r) {
        const Share2 first = data_[static_cast<size_t>(r * 4)];
        for (int c = 0; c < 3; ++c)
            set_share(reg_data_ + (r * 4 + c) * stride,
                      data_[static_cast<size_t>(r * 4 + c)],
                      data_[static_cast<size_t>(r * 4 + c + 1)]);
        set_share(reg_data_ + (r * 4 + 3) * stride,
                  data_[static_cast<size_t>(r * 4 + 3)], first);
    }
    set_counter(reg_bcount_, counters_.bcount, counters_.bcount + 1);
    return counters_.bcount == 3;
}

bool Simulator::cycle_mixcol() {
    apply_mds_to_col0();
    if (phase_ < 3) {
        set_counter(reg_phase_, phase_, phase_ + 1);
        return false;
    }
    set_counter(reg_phase_, phase_, 0);
    set_counter(reg_bcount_, counters_.bcount, counters_.bcount + 1);
    return counters_.bcount == 4;
}

bool Simulator::cycle_back() {
    out_bits_ = (out_bits_ << 4) | recombine_2to1(data_[HEAD]);
    ++out_nibbles_;
    rotate_data(Share2{});
    set_counter(reg_bcount_, counters_.bcount, counters_.bcount + 1);
    return counters_.bcount == 16;
}

void Simulator::advance_after_state() {
    FsmState next = fsm_next(fsm_, counters_);
    switch (fsm_) {
        case FsmState::ADDSHARE:
        case FsmState::INIT:
            defer_counter_reset(reg_bcount_, counters_.bcount);
            if (fsm_ == FsmState::INIT) fire_boundary_hook(0);
            break;
        case FsmState::SBOX_CAL:
            // SBOX_SHIFT is zero-latency: the nibble count bumps on this
            // same clock and the sweep either continues or falls through.
            set_counter(reg_bcount_, counters_.bcount, counters_.bcount + 1);
            next = fsm_next(FsmState::SBOX_SHIFT, counters_);
            if (next == FsmState::SHIFTROW)
                defer_counter_reset(reg_bcount_, counters_.bcount);
            break;
        case FsmState::SHIFTROW:
            defer_counter_reset(reg_bcount_, counters_.bcount);
            break;
        case FsmState::MIXCOL:
            // NEXTROUND is zero-latency: the round count bumps here.
            defer_counter_reset(reg_bcount_, counters_.bcount);
            set_counter(reg_rcount_, counters_.rcount, counters_.rcount + 1);
            next = fsm_next(FsmState::NEXTROUND, counters_);
            if (next == FsmState::ADDKEY) {
                set_counter(reg_scount_, counters_.scount,
                            counters_.scount + 1);
                defer_counter_reset(reg_rcount_, counters_.rcount);
            }
            break;
        case FsmState::ADDKEY:
            defer_counter_reset(reg_bcount_, counters_.bcount);
            fire_boundary_hook(counters_.scount);
            if (next == FsmState::BACK && design_ == Design::Unprotected) {
                out_bits_ = recombined_state().to_u64();
                next = FsmState::IDLE;
            }
            break;
        case FsmState::BACK:
            defer_counter_reset(reg_bcount_, counters_.bcount);
            break;
        default:
            break;
    }
    if (next == FsmState::IDLE) {
        // No further cycle will sync the FSM register; log the return edge
        // on this final clock.
        int fsm_reg_value = static_cast<int>(logged_fsm_);
        set_counter(reg_fsm_, fsm_reg_value, static_cast<int>(FsmState::IDLE));
        logged_fsm_ = FsmState::IDLE;
    }
    fsm_ = next;
}

void Simulator::step_cycle(TransitionSink* sink) {
    if (!running())
        throw state_error("step_cycle on an idle simulator (load inputs first)");
    sink_ = sink;
    if (sink_) sink_->begin_cycle(cycle_, fsm_);
    armed_resets_.swap(pending_resets_);  // counters deferred last cycle clear now
    if (logged_fsm_ != fsm_) {
        int fsm_reg_value = static_cast<int>(logged_fsm_);
        set_counter(reg_fsm_, fsm_reg_value, static_cast<int>(fsm_));
        logged_fsm_ = fsm_;
    }
    if (dispatch()) advance_after_state();
    flush_armed_resets();
    if (sink_) sink_->end_cycle();
    sink_ = nullptr;
    ++cycle_;
}

uint64_t Simulator::run_to_completion(TransitionSink* sink) {
    if (!running())
        throw state_error("run_to_completion on an idle simulator");
    while (running()) step_cycle(sink);
    return out_bits_;
}

RunResult run_protected(const SboxDecomposition& d, uint64_t plaintext,
                        const Key128& key, Rng rng, SimConfig cfg) {
    Simulator sim(Design::Protected, d, cfg);
    LogCollector collector(sim.register_map());
    sim.load_inputs(plaintext, key, rng);
    RunResult r;
    r.ciphertext = sim.run_to_completion(&collector);
    r.log = collector.take();
    return r;
}

RunResult run_unprotected(uint64_t plaintext, const Key128& key) {
    Simulator sim(Design::Unprotected, builtin_decomposition(), SimConfig{});
    LogCollector collector(sim.register_map());
    sim.load_inputs(plaintext, key, Rng(0));
    RunResult r;
    r.ciphertext = sim.run_to_completion(&collector);
    r.log = collector.take();
    return r;
}

uint64_t protected_cycle_total() {
    const uint64_t round = 16 * (1 + 3) + 3 + 16;      // AC+SB, SR, MC
    const uint64_t step = ROUNDS_PER_STEP * round + 16;  // + ADDKEY
    return 16 + 16 + NUM_STEPS * step + 16;  // ADDSHARE + INIT + steps + BACK
}

uint64_t unprotected_cycle_total() {
    const uint64_t round = 16 * (1 + 1) + 3 + 16;
    const uint64_t step = ROUNDS_PER_STEP * round + 16;
    return 16 + NUM_STEPS * step;  // INIT + steps (direct load, direct out)
}

}  // namespace ledti
