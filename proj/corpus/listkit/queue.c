#include <stdlib.h>
/* listkit/queue.c */
struct queue_node {
  int key;
  int value;
  char *label;
  struct queue_node *next;
};

struct queue_node *listkit_queue_alloc();

int listkit_queue_limit = 40;
int listkit_queue_errors;
char *listkit_queue_name = "listkit_queue";

struct queue_node *listkit_queue_push(struct queue_node *head, int key, int value) {
  struct queue_node *n = listkit_queue_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int listkit_queue_length(struct queue_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct queue_node *listkit_queue_find(struct queue_node *head, int key) {
  struct queue_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int listkit_queue_value_or(struct queue_node *head, int key, int fallback) {
  struct queue_node *hit = listkit_queue_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int listkit_queue_nested0(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 7 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int listkit_queue_branchy1(int x, int y) {
  int result;
  // pick the larger, biased by 33
  if (x > y || x == 33) {
    result = x - y;
  } else if (y > 33 && !x) {
    result = y + 33;
  } else {
    result = 0;
  }
  return result;
}

int listkit_queue_loop2(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc - i;
    } else {
      acc = acc - 1;
    }
    if (acc > 400) {
      break;
    }
    if (acc < 0 && i > 4) {
      continue;
    }
  }
  return acc;
}

int listkit_queue_fill(struct queue_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 7;
  return listkit_queue_length(node);
}

int listkit_queue_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'z') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("listkit_queue_count", hits);
  return hits;
}

void listkit_queue_scale(struct queue_node *head) {
  struct queue_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 3;
    cur = cur->next;
  }
}

int listkit_queue_main(int argc) {
  int total = 0;
  total = total + listkit_queue_nested0(1, 2);
  total = total + listkit_queue_branchy1(2, 3);
  total = total + listkit_queue_loop2(3, 4);
  if (total > listkit_queue_limit) {
    listkit_queue_errors = listkit_queue_errors + 1;
  }
  return total;
}
