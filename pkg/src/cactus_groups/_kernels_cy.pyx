# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of `_kernels_py`: identical interface and behaviour.

Words whose letters fit in 63 bits run on C buffers; bounded BFS encodes a
word as a single machine integer (a sentinel bit followed by fixed-width
letter fields) whenever the length bound allows, with a flat visited array
when the encoded universe is small enough.  Anything that does not fit
falls back to the pure-Python twin, so behaviour never depends on input
size.  Keep `tests/test_kernels.py` green against both modules.
"""

from libc.stdint cimport int32_t, uint64_t
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memset

from . import _kernels_py

BACKEND = "cython"

cdef enum:
    MAX_WORD = 4096
    # flat visited arrays up to 2^24 cells (16 MB of flags, 64 MB of labels)
    FLAT_BITS = 24

cdef uint64_t MAX_LETTER = (<uint64_t>1 << 63) - 1


# ---------------------------------------------------------------------------
# loading Python words into C buffers

cdef Py_ssize_t _load(object word, uint64_t* buf, Py_ssize_t cap) except -2:
    """Copy ``word`` into ``buf``; -1 means the input needs the fallback."""
    cdef Py_ssize_t i = 0
    for v in word:
        if i >= cap:
            return -1
        if not isinstance(v, int) or v < 0 or v > MAX_LETTER:
            return -1
        buf[i] = <uint64_t> v
        i += 1
    return i


cdef inline bint _ccommutes(uint64_t a, uint64_t b) nogil:
    cdef uint64_t c = a & b
    return c == 0 or c == a or c == b


# ---------------------------------------------------------------------------
# lean / lexicographic kernels

cdef bint _c_is_lean(uint64_t* w, Py_ssize_t n) nogil:
    cdef Py_ssize_t i, j
    cdef uint64_t a, b, c
    for i in range(n - 1):
        a = w[i]
        for j in range(i + 1, n):
            b = w[j]
            if b == a:
                return False
            c = a & b
            if c != 0 and c != a and c != b:
                break
    return True


cdef Py_ssize_t _c_lean_reduce(uint64_t* w, Py_ssize_t n) nogil:
    """In-place deletion of separated equal pairs; returns the new length."""
    cdef Py_ssize_t i, j, k
    cdef uint64_t a, b, c
    cdef bint changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            a = w[i]
            for j in range(i + 1, n):
                b = w[j]
                if b == a:
                    for k in range(j, n - 1):
                        w[k] = w[k + 1]
                    for k in range(i, n - 2):
                        w[k] = w[k + 1]
                    n -= 2
                    changed = True
                    break
                c = a & b
                if c != 0 and c != a and c != b:
                    break
            if changed:
                break
    return n


cdef void _c_lex_least(uint64_t* w, Py_ssize_t n, uint64_t* out) nogil:
    """Greedy least-movable-letter extraction of the commutation class."""
    cdef Py_ssize_t filled = 0, m = n, i, j, best
    cdef uint64_t a, b, c
    cdef bint movable
    while m:
        best = -1
        for j in range(m):
            b = w[j]
            movable = True
            for i in range(j):
                a = w[i]
                c = a & b
                if c != 0 and c != a and c != b:
                    movable = False
                    break
            if movable and (best < 0 or b < w[best]):
                best = j
        out[filled] = w[best]
        filled += 1
        for i in range(best, m - 1):
            w[i] = w[i + 1]
        m -= 1


def commutes(a, b):
    """True iff chords a and b commute: nested or disjoint.

    >>> commutes(0b011, 0b111), commutes(0b011, 0b100), commutes(0b011, 0b110)
    (True, True, False)
    """
    c = a & b
    return c == 0 or c == a or c == b


def is_lean(word):
    """True iff no equal pair of letters can be made adjacent by commutations."""
    cdef uint64_t buf[MAX_WORD]
    cdef Py_ssize_t n = _load(word, buf, MAX_WORD)
    if n < 0:
        return _kernels_py.is_lean(word)
    return _c_is_lean(buf, n)


def lean_reduce(word):
    """Delete equal pairs separated only by commuting letters until lean."""
    cdef uint64_t buf[MAX_WORD]
    cdef Py_ssize_t i, n
    n = _load(word, buf, MAX_WORD)
    if n < 0:
        return _kernels_py.lean_reduce(word)
    n = _c_lean_reduce(buf, n)
    return tuple(<object> buf[i] for i in range(n))


def lex_least(word):
    """Lexicographically least word of the commutation class of ``word``."""
    cdef uint64_t buf[MAX_WORD]
    cdef uint64_t out[MAX_WORD]
    cdef Py_ssize_t i, n
    n = _load(word, buf, MAX_WORD)
    if n < 0:
        return _kernels_py.lex_least(word)
    _c_lex_least(buf, n, out)
    return tuple(<object> out[i] for i in range(n))


def canonical_if_lean(word):
    """Canonical form of a lean word, or None when the word is not lean."""
    cdef uint64_t buf[MAX_WORD]
    cdef uint64_t out[MAX_WORD]
    cdef Py_ssize_t i, n
    n = _load(word, buf, MAX_WORD)
    if n < 0:
        return _kernels_py.canonical_if_lean(word)
    if not _c_is_lean(buf, n):
        return None
    _c_lex_least(buf, n, out)
    return tuple(<object> out[i] for i in range(n))


# ---------------------------------------------------------------------------
# integer word codes for bounded BFS
#
# code = (1 << (L * nb)) | letters, nb bits per letter, leftmost letter in
# the highest field; the sentinel bit makes lengths self-delimiting.

cdef inline Py_ssize_t _code_len(uint64_t code, int nb) nogil:
    cdef Py_ssize_t n = 0
    while code > 1:
        code >>= nb
        n += 1
    return n


cdef uint64_t _encode(uint64_t* w, Py_ssize_t n, int nb) nogil:
    cdef uint64_t code = 1
    cdef Py_ssize_t i
    for i in range(n):
        code = (code << nb) | w[i]
    return code


cdef object _decode(uint64_t code, int nb):
    cdef uint64_t mask = (<uint64_t>1 << nb) - 1
    letters = []
    while code > 1:
        letters.append(<object> (code & mask))
        code >>= nb
    letters.reverse()
    return tuple(letters)


cdef Py_ssize_t _c_neighbors(
    uint64_t code,
    int nb,
    uint64_t* letters,
    Py_ssize_t nlet,
    Py_ssize_t max_len,
    uint64_t* out,
) nogil:
    """Writes all neighbour codes of ``code`` to ``out``; returns the count.

    ``out`` needs room for (L-1) + (L+1)*nlet codes.
    """
    cdef Py_ssize_t L = _code_len(code, nb)
    cdef Py_ssize_t count = 0, i, j
    cdef uint64_t mask = (<uint64_t>1 << nb) - 1
    cdef uint64_t a, b, diff, upper, lower, piece
    cdef int sh
    # adjacent pairs: delete if equal, swap if commuting
    for i in range(L - 1):
        sh = <int> ((L - 1 - i) * nb)
        a = (code >> sh) & mask
        b = (code >> (sh - nb)) & mask
        if a == b:
            upper = code >> (sh + nb)
            lower = code & ((<uint64_t>1 << (sh - nb)) - 1)
            out[count] = (upper << (sh - nb)) | lower
            count += 1
        elif _ccommutes(a, b):
            diff = a ^ b
            out[count] = code ^ (diff << sh) ^ (diff << (sh - nb))
            count += 1
    # insert an equal pair at any position
    if L + 2 <= max_len:
        for i in range(L + 1):
            sh = <int> ((L - i) * nb)
            upper = code >> sh
            lower = code & ((<uint64_t>1 << sh) - 1)
            for j in range(nlet):
                a = letters[j]
                piece = (((upper << nb) | a) << nb) | a
                out[count] = (piece << sh) | lower
                count += 1
    return count


cdef Py_ssize_t _bsearch(uint64_t* arr, Py_ssize_t n, uint64_t key) nogil:
    cdef Py_ssize_t lo = 0, hi = n - 1, mid
    while lo <= hi:
        mid = (lo + hi) // 2
        if arr[mid] == key:
            return mid
        if arr[mid] < key:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


cdef struct Queue:
    uint64_t* data
    Py_ssize_t head
    Py_ssize_t tail
    Py_ssize_t cap


cdef int _queue_init(Queue* q) except -1:
    q.cap = 4096
    q.head = 0
    q.tail = 0
    q.data = <uint64_t*> malloc(q.cap * sizeof(uint64_t))
    if q.data == NULL:
        raise MemoryError()
    return 0


cdef int _queue_push(Queue* q, uint64_t code) except -1:
    cdef uint64_t* grown
    if q.tail == q.cap:
        q.cap *= 2
        grown = <uint64_t*> realloc(q.data, q.cap * sizeof(uint64_t))
        if grown == NULL:
            raise MemoryError()
        q.data = grown
    q.data[q.tail] = code
    q.tail += 1
    return 0


cdef class _Arena:
    """Owns the C allocations of one BFS so errors cannot leak them."""
    cdef uint64_t* letters
    cdef uint64_t* nbuf
    cdef uint64_t* targets
    cdef uint64_t* seeds
    cdef char* flags
    cdef char* seen
    cdef int32_t* labels
    cdef Queue queue

    def __cinit__(self):
        self.letters = NULL
        self.nbuf = NULL
        self.targets = NULL
        self.seeds = NULL
        self.flags = NULL
        self.seen = NULL
        self.labels = NULL
        self.queue.data = NULL

    def __dealloc__(self):
        free(self.letters)
        free(self.nbuf)
        free(self.targets)
        free(self.seeds)
        free(self.flags)
        free(self.seen)
        free(self.labels)
        free(self.queue.data)


cdef int _setup(
    _Arena arena,
    object letters,
    Py_ssize_t max_len,
    int* nb_out,
    Py_ssize_t* nlet_out,
    int* total_bits_out,
) except -1:
    """Loads the alphabet and sizes the encoding; -1 bits means fallback."""
    cdef uint64_t buf[MAX_WORD]
    cdef Py_ssize_t nlet = _load(letters, buf, MAX_WORD)
    cdef Py_ssize_t i
    cdef int nb = 1
    cdef uint64_t top = 0
    total_bits_out[0] = -1
    if nlet <= 0 or max_len < 0 or max_len > 62:
        return 0
    for i in range(nlet):
        if buf[i] == 0:
            return 0
        if buf[i] > top:
            top = buf[i]
    while (top >> nb) != 0:
        nb += 1
    if max_len * nb + 1 > 63:
        return 0
    arena.letters = <uint64_t*> malloc(nlet * sizeof(uint64_t))
    if arena.letters == NULL:
        raise MemoryError()
    for i in range(nlet):
        arena.letters[i] = buf[i]
    # neighbour buffer: (L-1) deletes/swaps + (L+1)*nlet inserts, L <= max_len
    arena.nbuf = <uint64_t*> malloc(
        ((max_len + 1) * nlet + max_len + 1) * sizeof(uint64_t)
    )
    if arena.nbuf == NULL:
        raise MemoryError()
    nb_out[0] = nb
    nlet_out[0] = nlet
    total_bits_out[0] = <int> (max_len * nb + 1)
    return 0


cdef Py_ssize_t _load_word_checked(
    object word, uint64_t* buf, int nb, Py_ssize_t max_len
) except -2:
    """Load a word whose letters must fit the nb-bit fields; -1 = fallback."""
    cdef Py_ssize_t n = _load(word, buf, MAX_WORD)
    cdef Py_ssize_t i
    if n < 0 or n > max_len:
        return -1
    for i in range(n):
        if buf[i] == 0 or (buf[i] >> nb) != 0:
            return -1
    return n


def bfs_reach(start, targets, letters, max_len, state_cap):
    """Which of ``targets`` are reachable from ``start`` by relation moves.

    Moves: swap adjacent commuting letters, delete an adjacent equal pair,
    insert an adjacent equal pair (any letter), never exceeding ``max_len``
    letters.  Returns one bool per target, or None once more than
    ``state_cap`` states have been visited.
    """
    target_list = list(targets)
    if not target_list:
        return []
    cdef Py_ssize_t cap_states = <Py_ssize_t> min(state_cap, 2**62)
    cdef Py_ssize_t bound = <Py_ssize_t> max_len
    cdef _Arena arena = _Arena()
    cdef int nb = 0, total_bits = 0
    cdef Py_ssize_t nlet = 0
    cdef uint64_t wbuf[MAX_WORD]
    cdef Py_ssize_t n = 0, i, ntarg, nuniq, missing, visited, hit, cnt, j
    cdef uint64_t start_code, code, nbcode
    cdef bint use_flat

    _setup(arena, letters, bound, &nb, &nlet, &total_bits)
    if total_bits > 0:
        n = _load_word_checked(start, wbuf, nb, bound)
        if n < 0:
            total_bits = -1
    if total_bits < 0:
        return _kernels_py.bfs_reach(start, target_list, letters, max_len, state_cap)
    start_code = _encode(wbuf, n, nb)

    # unique sorted target codes, with a map back to the input positions
    ntarg = len(target_list)
    arena.targets = <uint64_t*> malloc(ntarg * sizeof(uint64_t))
    if arena.targets == NULL:
        raise MemoryError()
    code_positions = {}
    for i in range(ntarg):
        n = _load_word_checked(target_list[i], wbuf, nb, bound)
        if n < 0:
            return _kernels_py.bfs_reach(
                start, target_list, letters, max_len, state_cap
            )
        code = _encode(wbuf, n, nb)
        code_positions.setdefault(code, []).append(i)
    nuniq = len(code_positions)
    unique_sorted = sorted(code_positions)
    arena.flags = <char*> malloc(nuniq)
    if arena.flags == NULL:
        raise MemoryError()
    for i in range(nuniq):
        arena.targets[i] = <uint64_t> unique_sorted[i]
        arena.flags[i] = 0
    missing = nuniq

    use_flat = total_bits <= FLAT_BITS
    seen_set = set()
    if use_flat:
        arena.seen = <char*> malloc(<size_t>1 << total_bits)
        if arena.seen == NULL:
            raise MemoryError()
        memset(arena.seen, 0, <size_t>1 << total_bits)
    _queue_init(&arena.queue)
    _queue_push(&arena.queue, start_code)
    if use_flat:
        arena.seen[start_code] = 1
    else:
        seen_set.add(start_code)
    visited = 1
    hit = _bsearch(arena.targets, nuniq, start_code)
    if hit >= 0 and not arena.flags[hit]:
        arena.flags[hit] = 1
        missing -= 1
    while arena.queue.head < arena.queue.tail and missing:
        code = arena.queue.data[arena.queue.head]
        arena.queue.head += 1
        cnt = _c_neighbors(code, nb, arena.letters, nlet, bound, arena.nbuf)
        for j in range(cnt):
            nbcode = arena.nbuf[j]
            if use_flat:
                if arena.seen[nbcode]:
                    continue
                arena.seen[nbcode] = 1
            else:
                if nbcode in seen_set:
                    continue
                seen_set.add(nbcode)
            visited += 1
            if visited > cap_states:
                return None
            hit = _bsearch(arena.targets, nuniq, nbcode)
            if hit >= 0 and not arena.flags[hit]:
                arena.flags[hit] = 1
                missing -= 1
            _queue_push(&arena.queue, nbcode)

    found = [False] * ntarg
    for i in range(nuniq):
        if arena.flags[i]:
            for pos in code_positions[<object> arena.targets[i]]:
                found[pos] = True
    return found


def reachable_class(start, letters, max_len, state_cap):
    """All words reachable from ``start`` by relation moves, length-bounded."""
    cdef Py_ssize_t cap_states = <Py_ssize_t> min(state_cap, 2**62)
    cdef Py_ssize_t bound = <Py_ssize_t> max_len
    cdef _Arena arena = _Arena()
    cdef int nb = 0, total_bits = 0
    cdef Py_ssize_t nlet = 0
    cdef uint64_t wbuf[MAX_WORD]
    cdef Py_ssize_t n = 0, visited, cnt, j
    cdef uint64_t start_code, code, nbcode
    cdef bint use_flat

    _setup(arena, letters, bound, &nb, &nlet, &total_bits)
    if total_bits > 0:
        n = _load_word_checked(start, wbuf, nb, bound)
        if n < 0:
            total_bits = -1
    if total_bits < 0:
        return _kernels_py.reachable_class(start, letters, max_len, state_cap)
    start_code = _encode(wbuf, n, nb)

    use_flat = total_bits <= FLAT_BITS
    seen_set = set()
    if use_flat:
        arena.seen = <char*> malloc(<size_t>1 << total_bits)
        if arena.seen == NULL:
            raise MemoryError()
        memset(arena.seen, 0, <size_t>1 << total_bits)
    _queue_init(&arena.queue)
    _queue_push(&arena.queue, start_code)
    if use_flat:
        arena.seen[start_code] = 1
    else:
        seen_set.add(start_code)
    visited = 1
    while arena.queue.head < arena.queue.tail:
        code = arena.queue.data[arena.queue.head]
        arena.queue.head += 1
        cnt = _c_neighbors(code, nb, arena.letters, nlet, bound, arena.nbuf)
        for j in range(cnt):
            nbcode = arena.nbuf[j]
            if use_flat:
                if arena.seen[nbcode]:
                    continue
                arena.seen[nbcode] = 1
            else:
                if nbcode in seen_set:
                    continue
                seen_set.add(nbcode)
            visited += 1
            if visited > cap_states:
                return None
            _queue_push(&arena.queue, nbcode)
    # every visited code sits in the queue buffer exactly once
    out = set()
    for j in range(arena.queue.tail):
        out.add(_decode(arena.queue.data[j], nb))
    return out


def swap_class(start, state_cap):
    """The commutation class of ``start``: adjacent commuting swaps only."""
    cdef uint64_t wbuf[MAX_WORD]
    cdef Py_ssize_t n = _load(start, wbuf, MAX_WORD)
    cdef Py_ssize_t i, visited
    cdef uint64_t top = 0
    cdef int nb = 1, sh
    cdef Py_ssize_t cap_states
    cdef uint64_t start_code, code, newcode, a, b, diff, mask
    cdef _Arena arena

    if n < 0:
        return _kernels_py.swap_class(start, state_cap)
    for i in range(n):
        if wbuf[i] == 0:
            return _kernels_py.swap_class(start, state_cap)
        if wbuf[i] > top:
            top = wbuf[i]
    if n:
        while (top >> nb) != 0:
            nb += 1
    if n * nb + 1 > 63:
        return _kernels_py.swap_class(start, state_cap)

    cap_states = <Py_ssize_t> min(state_cap, 2**62)
    start_code = _encode(wbuf, n, nb)
    mask = (<uint64_t>1 << nb) - 1
    arena = _Arena()
    seen_set = {start_code}
    _queue_init(&arena.queue)
    _queue_push(&arena.queue, start_code)
    visited = 1
    while arena.queue.head < arena.queue.tail:
        code = arena.queue.data[arena.queue.head]
        arena.queue.head += 1
        for i in range(n - 1):
            sh = <int> ((n - 1 - i) * nb)
            a = (code >> sh) & mask
            b = (code >> (sh - nb)) & mask
            if a == b or not _ccommutes(a, b):
                continue
            diff = a ^ b
            newcode = code ^ (diff << sh) ^ (diff << (sh - nb))
            if newcode in seen_set:
                continue
            seen_set.add(newcode)
            visited += 1
            if visited > cap_states:
                return None
            _queue_push(&arena.queue, newcode)
    return {_decode(<uint64_t> c, nb) for c in seen_set}


def component_ids(words, letters, max_len, state_cap):
    """Connected-component labels of ``words`` under the relation moves.

    One flood fill per previously unseen word, sharing the visited map;
    ``state_cap`` bounds the total states across all floods.  Two words get
    equal labels iff each is reachable from the other within ``max_len``.
    """
    word_list = list(words)
    if not word_list:
        return []
    cdef Py_ssize_t cap_states = <Py_ssize_t> min(state_cap, 2**62)
    cdef Py_ssize_t bound = <Py_ssize_t> max_len
    cdef _Arena arena = _Arena()
    cdef int nb = 0, total_bits = 0
    cdef Py_ssize_t nlet = 0
    cdef uint64_t wbuf[MAX_WORD]
    cdef Py_ssize_t n, i, k, cnt, j, visited, nwords, ncells
    cdef uint64_t code, nbcode, seed
    cdef int32_t next_id = 0, comp
    cdef bint use_flat

    _setup(arena, letters, bound, &nb, &nlet, &total_bits)
    nwords = len(word_list)
    if total_bits > 0:
        arena.seeds = <uint64_t*> malloc(nwords * sizeof(uint64_t))
        if arena.seeds == NULL:
            raise MemoryError()
        for i in range(nwords):
            n = _load_word_checked(word_list[i], wbuf, nb, bound)
            if n < 0:
                total_bits = -1
                break
            arena.seeds[i] = _encode(wbuf, n, nb)
    if total_bits < 0:
        return _kernels_py.component_ids(word_list, letters, max_len, state_cap)

    use_flat = total_bits <= FLAT_BITS
    label_map = {}
    if use_flat:
        ncells = (<Py_ssize_t>1) << total_bits
        arena.labels = <int32_t*> malloc(ncells * sizeof(int32_t))
        if arena.labels == NULL:
            raise MemoryError()
        memset(arena.labels, 0xFF, ncells * sizeof(int32_t))
    _queue_init(&arena.queue)
    visited = 0
    for k in range(nwords):
        seed = arena.seeds[k]
        if use_flat:
            if arena.labels[seed] >= 0:
                continue
        else:
            if seed in label_map:
                continue
        comp = next_id
        next_id += 1
        if use_flat:
            arena.labels[seed] = comp
        else:
            label_map[seed] = comp
        visited += 1
        arena.queue.head = 0
        arena.queue.tail = 0
        _queue_push(&arena.queue, seed)
        while arena.queue.head < arena.queue.tail:
            code = arena.queue.data[arena.queue.head]
            arena.queue.head += 1
            cnt = _c_neighbors(code, nb, arena.letters, nlet, bound, arena.nbuf)
            for j in range(cnt):
                nbcode = arena.nbuf[j]
                if use_flat:
                    if arena.labels[nbcode] >= 0:
                        continue
                    arena.labels[nbcode] = comp
                else:
                    if nbcode in label_map:
                        continue
                    label_map[nbcode] = comp
                visited += 1
                if visited > cap_states:
                    return None
                _queue_push(&arena.queue, nbcode)
    if use_flat:
        return [<object> arena.labels[arena.seeds[k]] for k in range(nwords)]
    return [label_map[arena.seeds[k]] for k in range(nwords)]
