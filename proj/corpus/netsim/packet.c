#include <stdlib.h>
/* netsim/packet.c */
struct packet_node {
  int key;
  int value;
  char *label;
  struct packet_node *next;
};

struct packet_node *netsim_packet_alloc();

int netsim_packet_limit = 152;
int netsim_packet_errors;
char *netsim_packet_name = "netsim_packet";

struct packet_node *netsim_packet_push(struct packet_node *head, int key, int value) {
  struct packet_node *n = netsim_packet_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int netsim_packet_length(struct packet_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct packet_node *netsim_packet_find(struct packet_node *head, int key) {
  struct packet_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int netsim_packet_value_or(struct packet_node *head, int key, int fallback) {
  struct packet_node *hit = netsim_packet_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int netsim_packet_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc + i;
    } else {
      acc = acc - 1;
    }
    if (acc > 600) {
      break;
    }
    if (acc < 0 && i > 6) {
      continue;
    }
  }
  return acc;
}

int netsim_packet_loop1(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc * i;
    } else {
      acc = acc - 1;
    }
    if (acc > 3300) {
      break;
    }
    if (acc < 0 && i > 33) {
      continue;
    }
  }
  return acc;
}

int netsim_packet_loop2(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 2) {
    if (i % 2 == 0) {
      acc = acc - i;
    } else {
      acc = acc - 1;
    }
    if (acc > 2100) {
      break;
    }
    if (acc < 0 && i > 21) {
      continue;
    }
  }
  return acc;
}

int netsim_packet_loop3(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc + i;
    } else {
      acc = acc - 1;
    }
    if (acc > 1400) {
      break;
    }
    if (acc < 0 && i > 14) {
      continue;
    }
  }
  return acc;
}

int netsim_packet_fill(struct packet_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 0;
  return netsim_packet_length(node);
}

int netsim_packet_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'c') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("netsim_packet_count", hits);
  return hits;
}

void netsim_packet_scale(struct packet_node *head) {
  struct packet_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 5;
    cur = cur->next;
  }
}

int netsim_packet_main(int argc) {
  int total = 0;
  total = total + netsim_packet_loop0(1, 2);
  total = total + netsim_packet_loop1(2, 3);
  total = total + netsim_packet_loop2(3, 4);
  total = total + netsim_packet_loop3(4, 5);
  if (total > netsim_packet_limit) {
    netsim_packet_errors = netsim_packet_errors + 1;
  }
  return total;
}
