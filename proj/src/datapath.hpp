#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "led_core.hpp"
#include "rng.hpp"
#include "sbox_ti.hpp"
#include "shares.hpp"

namespace ledti {

// Control states of the byte-serial designs. SBOX_SHIFT and NEXTROUND are
// zero-latency: they appear in the transition graph (and in fsm_next) but
// their effects commit on the same clock as the preceding billable cycle, so
// they never label a logged cycle. That keeps the AddConstant+SubCells sweep
// at exactly 16 x (1 + 3) = 64 cycles.
enum class FsmState : uint8_t {
    IDLE,
    ADDSHARE,
    INIT,
    ADDCONSTANT,
    SBOX_CAL,
    SBOX_SHIFT,
    SHIFTROW,
    MIXCOL,
    NEXTROUND,
    ADDKEY,
    BACK,
};

const char* fsm_state_name(FsmState s);

// Loop bookkeeping. bcount counts iterations of the current serial loop and
// loops exit at 16 (nibbles) except SHIFTROW (3 row-rotation cycles) and
// MIXCOL (4 columns); rcount counts rounds within a step and trips at 4;
// scount counts completed steps and trips at 12.
struct Counters {
    int bcount = 0;
    int rcount = 0;
    int scount = 0;
};

// Successor of a state once its work is done, evaluated at state exit with
// the counters as they stand at that moment. Total on reachable pairs.
FsmState fsm_next(FsmState state, const Counters& c);

// --- transition logging ----------------------------------------------------

struct RegisterInfo {
    std::string name;
    int width = 4;  // bits
};

struct Transition {
    uint16_t reg = 0;  // index into the simulator's register map
    uint16_t old_value = 0;
    uint16_t new_value = 0;
};

struct CycleRecord {
    FsmState state = FsmState::IDLE;
    std::vector<Transition> changes;
};

// Consumer of per-cycle register activity. The trace synthesizer implements
// this directly so bulk generation never materializes full logs.
class TransitionSink {
public:
    virtual ~TransitionSink() = default;
    virtual void begin_cycle(uint64_t cycle, FsmState state) = 0;
    virtual void record(const Transition& t, int width) = 0;
    virtual void end_cycle() = 0;
};

// Full in-memory register-transition history of one run.
struct TransitionLog {
    std::vector<RegisterInfo> registers;
    std::vector<CycleRecord> cycles;

    uint64_t cycle_count() const { return cycles.size(); }
    // CSV export, one `cycle,state,reg_id,old_hex,new_hex` line per change.
    void export_csv(std::ostream& out) const;
    void export_csv_file(const std::string& path) const;
};

// Sink that materializes a TransitionLog.
class LogCollector : public TransitionSink {
public:
    explicit LogCollector(std::vector<RegisterInfo> registers) {
        log_.registers = std::move(registers);
    }
    void begin_cycle(uint64_t, FsmState state) override {
        log_.cycles.push_back(CycleRecord{state, {}});
    }
    void record(const Transition& t, int) override {
        log_.cycles.back().changes.push_back(t);
    }
    void end_cycle() override {}
    TransitionLog take() { return std::move(log_); }

private:
    TransitionLog log_;
};

// --- the simulator -----------------------------------------------------------

enum class Design : uint8_t {
    Unprotected,  // single-share serial datapath, direct 1-cycle Sbox
    Protected,    // two-share registers, three-share Sbox pipeline
};

struct SimConfig {
    // Default: the 6-bit round-constant register is kept as two shares and
    // the constant enters the datapath share-wise. The one-share variant
    // stores RC unshared and XORs it into share 0 only (RC is public, so
    // both are sound; they differ in logged activity).
    bool rc_one_share = false;
};

// Cycle-accurate model of the byte-serial LED datapaths. One instance is
// strictly sequential; distinct instances share nothing.
class Simulator {
public:
    Simulator(Design design, const SboxDecomposition& d, SimConfig cfg = {});

    // Arms a run. Protected: stages the inputs; the 16 ADDSHARE cycles then
    // draw one fresh mask per data/key nibble (order per cycle: data, k1,
    // k2, after one initial 6-bit RC mask). Unprotected: registers load
    // directly (a reset-load, not billed or logged) and the rng is unused.
    // Throws State error if a run is already in progress.
    void load_inputs(uint64_t plaintext, const Key128& key, Rng rng);

    // Advances exactly one billable clock. Throws State error when idle.
    void step_cycle(TransitionSink* sink);

    // Steps until the design returns to IDLE; returns the ciphertext.
    uint64_t run_to_completion(TransitionSink* sink);

    bool running() const { return fsm_ != FsmState::IDLE; }
    FsmState state() const { return fsm_; }
    const Counters& counters() const { return counters_; }
    uint64_t cycle() const { return cycle_; }
    const std::vector<RegisterInfo>& register_map() const { return registry_; }

    // Recombined data matrix (test hook; the hardware exposes no such tap).
    State recombined_state() const;

    // Called after the initial key addition and after every ADDKEY sweep
    // with the boundary index (0 = initial) and the recombined state.
    using BoundaryHook = std::function<void(int boundary, const State&)>;
    void set_boundary_hook(BoundaryHook hook) { boundary_hook_ = std::move(hook); }

    // Share indices read by each Sbox pipeline write port, for the
    // structural non-completeness check: row i lists, per input variable,
    // which of its three shares feed output share i.
    static const std::array<std::array<bool, 3>, 3>& sbox_wiring();

private:
    struct KeyBank {
        std::array<Share2, 16> cells{};  // serpentine order = row-major index
    };

    void reset_registers();
    void build_registry();
    void set_share(int base_reg, Share2& slot, Share2 v);
    void set_nibble(int reg, uint8_t& slot, uint8_t v);
    void set_counter(int reg, int& slot, int v);
    void defer_counter_reset(int reg, int& slot);
    void flush_armed_resets();
    void rotate_data(const Share2& tail_in);
    void rotate_key(KeyBank& bank, const Share2& tail_in);
    void apply_mds_to_col0();
    void fire_boundary_hook(int boundary);

    // Per-state cycle handlers; true means the state finished this clock.
    bool dispatch();
    bool cycle_addshare();
    bool cycle_key_add(bool initial);
    bool cycle_addconstant();
    bool cycle_sbox();
    bool cycle_shiftrow();
    bool cycle_mixcol();
    bool cycle_back();
    void advance_after_state();

    Design design_;
    const SboxDecomposition& decomp_;
    SimConfig cfg_;

    std::array<Share2, 16> data_{};
    KeyBank key_[2];  // [0] = k1 bank, [1] = k2 bank
    Share3 sbin_{};
    Share3 gout_{};
    Share2 rc_{};  // 6-bit LFSR value, share-split unless rc_one_share
    FsmState fsm_ = FsmState::IDLE;
    FsmState logged_fsm_ = FsmState::IDLE;  // last value logged for `fsm`
    Counters counters_;
    int phase_ = 0;  // intra-iteration cycle: SBOX_CAL 0..2, MIXCOL 0..3
    uint64_t cycle_ = 0;

    uint64_t staged_pt_ = 0;
    Key128 staged_key_;
    Rng rng_{0};
    uint64_t out_bits_ = 0;
    int out_nibbles_ = 0;

    std::vector<RegisterInfo> registry_;
    TransitionSink* sink_ = nullptr;  // active only inside step_cycle
    BoundaryHook boundary_hook_;

    // Loop counters hold their terminal count (the loop bound) through the
    // exit edge and clear on the following clock, so the clearing write
    // belongs to the next cycle's log — standalone, or folded into that
    // cycle's own write to the same counter (never two entries per cycle).
    struct PendingReset {
        int reg;
        int old_value;
    };
    std::vector<PendingReset> pending_resets_;  // deferred to the next cycle
    std::vector<PendingReset> armed_resets_;    // clearing on this cycle

    // Registry base indices, filled by build_registry().
    int reg_data_ = 0;
    int reg_key_[2] = {0, 0};
    int reg_sbin_ = 0;
    int reg_gout_ = 0;
    int reg_rc_ = 0;
    int reg_fsm_ = 0;
    int reg_bcount_ = 0;
    int reg_rcount_ = 0;
    int reg_scount_ = 0;
    int reg_phase_ = 0;
};

// Convenience one-shot runs producing a full in-memory log.
struct RunResult {
    uint64_t ciphertext = 0;
    TransitionLog log;
};

RunResult run_protected(const SboxDecomposition& d, uint64_t plaintext,
                        const Key128& key, Rng rng, SimConfig cfg = {});
RunResult run_unprotected(uint64_t plaintext, const Key128& key);

// Cycle totals implied by the schedule (they are data-independent).
uint64_t protected_cycle_total();
uint64_t unprotected_cycle_total();

}  // namespace ledti
